#include <doctest.h>

#include "support.hpp"
#include "surfcluster/error.hpp"
#include "surfcluster/poly.hpp"

using namespace surfcluster;
using testsupport::one;
using testsupport::var;

TEST_CASE("ring identities") {
  std::vector<int> v{1, 2};
  LaurentPoly xa = var(v, 1);
  CHECK((xa + one(v)) * (xa - one(v)) == var(v, 1, 2) - one(v));

  LaurentPoly half = LaurentPoly::monomial(v, {1, 0});
  CHECK(half * half == xa);

  LaurentPoly ab = var(v, 2);
  CHECK(pow(ab, -2) * pow(ab, 2) == one(v));
  CHECK(pow(ab, 0) == one(v));
}

TEST_CASE("equality aligns variable universes") {
  CHECK(LaurentPoly::variable({3}, 3) == LaurentPoly::variable({1, 3, 5}, 3));
  CHECK(LaurentPoly::constant(2) == LaurentPoly::constant(2, {4, 7}));
  CHECK(LaurentPoly::variable({3}, 3) != LaurentPoly::variable({3, 5}, 5));
}

TEST_CASE("substitution by monomials") {
  // X_k -> A_a A_c / (A_b A_d) with a, b, c, d, k = 0, 1, 2, 3, 4.
  std::vector<int> v{0, 1, 2, 3, 4};
  LaurentPoly image = var(v, 0) * var(v, 2) * var(v, 1, -1) * var(v, 3, -1);
  std::map<int, LaurentPoly> map{{4, image}};
  CHECK(substitute_monomial(var(v, 4), map) == image);

  std::map<int, LaurentPoly> id;
  for (int x : v) id.emplace(x, var(v, x));
  LaurentPoly p = var(v, 4) + var(v, 1, -2) * LaurentPoly::constant(3, v);
  CHECK(substitute_monomial(p, id) == p);

  // 1 + X_k becomes (A_b A_d + A_a A_c) / (A_b A_d) after clearing the denominator.
  LaurentPoly s = substitute_monomial(one(v) + var(v, 4), map);
  CHECK(s * var(v, 1) * var(v, 3) == var(v, 1) * var(v, 3) + var(v, 0) * var(v, 2));
  CHECK(format(s, "A") == "(A_0*A_2 + A_1*A_3)/A_1*A_3");
}

TEST_CASE("substitution rejects unmapped variables") {
  std::vector<int> v{1, 2};
  std::map<int, LaurentPoly> map{{1, var(v, 2)}};
  CHECK_THROWS_AS(substitute_monomial(var(v, 2), map), Error);
}

TEST_CASE("lowest term") {
  std::vector<int> v{1, 2};
  LaurentPoly p = var(v, 1, -1) * var(v, 2, -1) * (one(v) + var(v, 1) + var(v, 1) * var(v, 2));
  CHECK(lowest_term(p) == var(v, 1, -1) * var(v, 2, -1));
  try {
    lowest_term(var(v, 1) + var(v, 2));
    FAIL("expected NoUniqueLowestTerm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoUniqueLowestTerm);
  }
}

TEST_CASE("positive evaluation") {
  std::vector<int> v{1, 2};
  LaurentPoly flip_image = var(v, 1) * (one(v) + var(v, 2));
  CHECK(eval_positive(flip_image, {{1, 7}, {2, 4}}) == 35);
  CHECK(eval_positive(var(v, 1) * var(v, 2, -3), {{1, 1}, {2, 1}}) == 1);
  CHECK(eval_positive(var(v, 2, -1), {{2, 3}}) == Rational(1, 3));
  CHECK(eval_positive(LaurentPoly::monomial(v, {1, 0}), {{1, Rational(9, 4)}, {2, 1}}) == Rational(3, 2));
  try {
    eval_positive(LaurentPoly::monomial(v, {1, 0}), {{1, 2}, {2, 1}});
    FAIL("expected NonPerfectSquare");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPerfectSquare);
  }
}

TEST_CASE("formatting is canonical") {
  std::vector<int> v{1, 2};
  CHECK(format(LaurentPoly::constant(0, v), "X") == "0");
  CHECK(format(one(v), "X") == "1");
  CHECK(format(LaurentPoly::monomial(v, {1, -2}), "X") == "X_1^(1/2)/X_2");
  std::map<int, std::string> labels{{1, "b"}, {2, "c"}};
  CHECK(format(var(v, 1) * var(v, 2), "A", labels, "") == "A_bA_c");
}

TEST_CASE("fractions reduce by exact division") {
  std::vector<int> v{1, 2};
  Fraction f(var(v, 1) * var(v, 1) - one(v), var(v, 1) - one(v));
  CHECK(f.is_laurent());
  CHECK(f.laurent() == var(v, 1) + one(v));
  Fraction g(one(v), one(v) + var(v, 2));
  CHECK_FALSE(g.is_laurent());
  CHECK(g * g.inverse() == Fraction(one(v)));
  CHECK(g + g == Fraction(one(v) * LaurentPoly::constant(2, v), one(v) + var(v, 2)));
}

TEST_CASE("ring laws on random polynomials") {
  auto g = testsupport::rng(1);
  std::vector<int> v{1, 2, 3};
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = testsupport::random_poly(g, v), b = testsupport::random_poly(g, v),
                c = testsupport::random_poly(g, v);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == LaurentPoly::constant(0, v));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto g = testsupport::rng(2);
  std::vector<int> v{1, 2, 3};
  std::uniform_int_distribution<int> ex(-2, 2);
  for (int i = 0; i < 100; ++i) {
    std::map<int, LaurentPoly> map;
    for (int x : v) map.emplace(x, LaurentPoly::monomial(v, {2 * ex(g), 2 * ex(g), 2 * ex(g)}));
    LaurentPoly a = testsupport::random_poly(g, v), b = testsupport::random_poly(g, v);
    CHECK(substitute_monomial(a * b, map) == substitute_monomial(a, map) * substitute_monomial(b, map));
    CHECK(substitute_monomial(a + b, map) == substitute_monomial(a, map) + substitute_monomial(b, map));
  }
}

TEST_CASE("lowest term is multiplicative") {
  auto g = testsupport::rng(3);
  std::vector<int> v{1, 2};
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    LaurentPoly a = testsupport::random_poly(g, v, 2), b = testsupport::random_poly(g, v, 2);
    LaurentPoly la, lb;
    try {
      la = lowest_term(a);
      lb = lowest_term(b);
    } catch (const Error&) {
      continue;
    }
    CHECK(lowest_term(a * b) == la * lb);
    ++checked;
  }
  CHECK(checked > 20);
}
