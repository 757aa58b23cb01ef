#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surfcluster/rational.hpp"

namespace surfcluster {

// Exponent vectors are stored doubled so that X^{1/2} has the integer
// exponent 1. `vars` lists variable ids in the fixed order used for the
// lexicographic term order.
using Exponent = std::vector<int>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<int> vars);
  static LaurentPoly constant(const Rational& c, std::vector<int> vars = {});
  // Monomial c * prod x_v^{doubled[v]/2}.
  static LaurentPoly monomial(std::vector<int> vars, Exponent doubled, const Rational& c = 1);
  // The single variable x_id^{power} (power is an ordinary integer exponent).
  static LaurentPoly variable(std::vector<int> vars, int id, int power = 1);

  const std::vector<int>& vars() const { return vars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  // True when every exponent is an ordinary integer.
  bool has_integer_exponents() const;
  std::size_t size() const { return terms_.size(); }
  int var_index(int id) const;

  // Coefficient of the given doubled exponent (0 if absent).
  Rational coefficient(const Exponent& doubled) const;
  Rational constant_term() const;

  void add_term(const Exponent& doubled, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly& operator*=(const Rational& c);

  // Canonical-form equality after aligning variable universes.
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Re-expresses the polynomial over `vars`, which must contain every
  // variable that occurs with a nonzero exponent.
  LaurentPoly with_vars(const std::vector<int>& vars) const;

 private:
  std::vector<int> vars_;
  std::map<Exponent, Rational> terms_;
};

LaurentPoly pow(const LaurentPoly& p, int n);

// Exact quotient p / q when it exists as a Laurent polynomial.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& q);

// Each variable of p is replaced by a Laurent monomial.
LaurentPoly substitute_monomial(const LaurentPoly& p, const std::map<int, LaurentPoly>& map);

// The term whose exponent is componentwise below every other exponent.
LaurentPoly lowest_term(const LaurentPoly& p);
// Doubled exponent of the lowest term.
Exponent lowest_exponent(const LaurentPoly& p);

Rational eval_positive(const LaurentPoly& p, const std::map<int, Rational>& point);

// Merged, ascending variable universe of a and b (or the common one).
std::vector<int> merge_vars(const std::vector<int>& a, const std::vector<int>& b);

// Human-readable form such as "(A_1*A_3 + A_2*A_4)/A_5".
std::string format(const LaurentPoly& p, const std::string& prefix);
// Same with variables renamed through `labels` and monomial factors joined
// by `separator`.
std::string format(const LaurentPoly& p, const std::string& prefix, const std::map<int, std::string>& labels,
                   const std::string& separator);

// Quotient of Laurent polynomials; reduced only by exact division, so
// equality is decided by cross-multiplication.
class Fraction {
 public:
  Fraction() : num_(LaurentPoly::constant(0)), den_(LaurentPoly::constant(1)) {}
  Fraction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  Fraction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_laurent() const { return den_.is_monomial(); }
  // Laurent form; throws NonMonomialInverse when the denominator survives.
  LaurentPoly laurent() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction inverse() const;
  friend bool operator==(const Fraction& a, const Fraction& b);
  friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

 private:
  void reduce();
  LaurentPoly num_, den_;
};

Fraction pow(const Fraction& f, int n);
Rational eval_positive(const Fraction& f, const std::map<int, Rational>& point);

}  // namespace surfcluster
