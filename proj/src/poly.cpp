#include "surfcluster/poly.hpp"

#include <algorithm>
#include <sstream>

#include "surfcluster/error.hpp"

namespace surfcluster {

namespace {

void align(LaurentPoly& a, LaurentPoly& b) {
  if (a.vars() == b.vars()) return;
  auto merged = merge_vars(a.vars(), b.vars());
  a = a.with_vars(merged);
  b = b.with_vars(merged);
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

std::vector<int> merge_vars(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b || b.empty()) return a;
  if (a.empty()) return b;
  std::vector<int> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LaurentPoly::LaurentPoly(std::vector<int> vars) : vars_(std::move(vars)) {}

LaurentPoly LaurentPoly::constant(const Rational& c, std::vector<int> vars) {
  LaurentPoly p(std::move(vars));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<int> vars, Exponent doubled, const Rational& c) {
  if (doubled.size() != vars.size())
    throw Error(ErrorKind::InvalidInput, "exponent length does not match variables");
  LaurentPoly p(std::move(vars));
  p.add_term(doubled, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<int> vars, int id, int power) {
  LaurentPoly p(std::move(vars));
  int idx = p.var_index(id);
  if (idx < 0) throw Error(ErrorKind::UnmappedVariable, "variable " + std::to_string(id));
  Exponent e(p.vars_.size(), 0);
  e[idx] = 2 * power;
  p.add_term(e, 1);
  return p;
}

int LaurentPoly::var_index(int id) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == id) return static_cast<int>(i);
  return -1;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  for (int e : terms_.begin()->first)
    if (e != 0) return false;
  return true;
}

bool LaurentPoly::has_integer_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x % 2 != 0) return false;
  return true;
}

Rational LaurentPoly::coefficient(const Exponent& doubled) const {
  auto it = terms_.find(doubled);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

void LaurentPoly::add_term(const Exponent& doubled, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(doubled, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (vars_ != o.vars_) {
    LaurentPoly b(o);
    align(*this, b);
    for (const auto& [e, c] : b.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly a(*this), b(o);
  align(a, b);
  LaurentPoly r(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  *this = std::move(r);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  LaurentPoly x(a), y(b);
  align(x, y);
  return x.terms_ == y.terms_;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<int>& vars) const {
  std::vector<int> where(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it != vars.end()) where[i] = static_cast<int>(it - vars.begin());
  }
  LaurentPoly r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (where[i] < 0)
        throw Error(ErrorKind::UnmappedVariable, "variable " + std::to_string(vars_[i]));
      ne[where[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

LaurentPoly pow(const LaurentPoly& p, int n) {
  if (n < 0) {
    if (!p.is_monomial())
      throw Error(ErrorKind::NonMonomialInverse, "negative power of a non-monomial");
    const auto& [e, c] = *p.terms().begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i] * (-n);
    Rational cc = 1;
    for (int k = 0; k < -n; ++k) cc /= c;
    return LaurentPoly::monomial(p.vars(), ne, cc);
  }
  LaurentPoly result = LaurentPoly::constant(1, p.vars());
  LaurentPoly base = p;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p0, const LaurentPoly& q0) {
  if (q0.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero polynomial");
  LaurentPoly p(p0), q(q0);
  align(p, q);
  if (p.is_zero()) return p;
  if (q.is_monomial()) return p * pow(q, -1);
  const std::size_t n = p.vars().size();
  // Shift both to genuine polynomials; q then has no monomial factor, so
  // divisibility as Laurent polynomials equals divisibility as polynomials.
  Exponent pmin(n, 0), qmin(n, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < n; ++i) pmin[i] = first ? e[i] : std::min(pmin[i], e[i]);
    first = false;
  }
  first = true;
  for (const auto& [e, c] : q.terms()) {
    for (std::size_t i = 0; i < n; ++i) qmin[i] = first ? e[i] : std::min(qmin[i], e[i]);
    first = false;
  }
  Exponent negp(n), negq(n);
  for (std::size_t i = 0; i < n; ++i) {
    negp[i] = -pmin[i];
    negq[i] = -qmin[i];
  }
  LaurentPoly P = p * LaurentPoly::monomial(p.vars(), negp);
  LaurentPoly Q = q * LaurentPoly::monomial(p.vars(), negq);
  const auto& [lq, lqc] = *Q.terms().rbegin();
  LaurentPoly quotient(p.vars());
  while (!P.is_zero()) {
    const auto& [lp, lpc] = *P.terms().rbegin();
    Exponent d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = lp[i] - lq[i];
      if (d[i] < 0) return std::nullopt;
    }
    LaurentPoly t = LaurentPoly::monomial(p.vars(), d, lpc / lqc);
    quotient += t;
    P -= t * Q;
  }
  Exponent shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = pmin[i] - qmin[i];
  return quotient * LaurentPoly::monomial(p.vars(), shift);
}

LaurentPoly substitute_monomial(const LaurentPoly& p, const std::map<int, LaurentPoly>& map) {
  std::vector<int> target;
  for (const auto& [v, m] : map) {
    if (!m.is_monomial())
      throw Error(ErrorKind::InvalidInput, "image of variable " + std::to_string(v) + " is not a monomial");
    target = merge_vars(target, m.vars());
  }
  // Image exponents (doubled) and coefficients per source variable.
  std::vector<Exponent> img(p.vars().size());
  std::vector<Rational> coef(p.vars().size(), Rational(1));
  std::vector<bool> mapped(p.vars().size(), false);
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    auto it = map.find(p.vars()[i]);
    if (it == map.end()) continue;
    LaurentPoly m = it->second.with_vars(target);
    img[i] = m.terms().begin()->first;
    coef[i] = m.terms().begin()->second;
    mapped[i] = true;
  }
  LaurentPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    Exponent ne(target.size(), 0);
    Rational cc = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mapped[i])
        throw Error(ErrorKind::UnmappedVariable, "variable " + std::to_string(p.vars()[i]));
      for (std::size_t j = 0; j < target.size(); ++j) {
        int prod = e[i] * img[i][j];
        if (prod % 2 != 0)
          throw Error(ErrorKind::InvalidInput, "substitution leaves the half-integer exponent lattice");
        ne[j] += prod / 2;
      }
      if (coef[i] != 1) {
        if (e[i] % 2 != 0) {
          auto [root, ok] = exact_sqrt(coef[i]);
          if (!ok) throw Error(ErrorKind::NonPerfectSquare, "coefficient under half exponent");
          for (int k = 0; k < std::abs(e[i]); ++k) cc = e[i] > 0 ? cc * root : cc / root;
        } else {
          for (int k = 0; k < std::abs(e[i]) / 2; ++k) cc = e[i] > 0 ? cc * coef[i] : cc / coef[i];
        }
      }
    }
    r.add_term(ne, cc);
  }
  return r;
}

Exponent lowest_exponent(const LaurentPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::NoUniqueLowestTerm, "zero polynomial");
  const std::size_t n = p.vars().size();
  Exponent mn = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) mn[i] = std::min(mn[i], e[i]);
  if (p.terms().find(mn) == p.terms().end())
    throw Error(ErrorKind::NoUniqueLowestTerm, "componentwise minimum is not a term");
  return mn;
}

LaurentPoly lowest_term(const LaurentPoly& p) {
  Exponent mn = lowest_exponent(p);
  return LaurentPoly::monomial(p.vars(), mn, p.coefficient(mn));
}

Rational eval_positive(const LaurentPoly& p, const std::map<int, Rational>& point) {
  const std::size_t n = p.vars().size();
  std::vector<Rational> val(n), root(n);
  std::vector<int> have_root(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = point.find(p.vars()[i]);
    if (it != point.end()) {
      if (it->second <= 0) throw Error(ErrorKind::InvalidInput, "evaluation point must be positive");
      val[i] = it->second;
    }
  }
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      auto it = point.find(p.vars()[i]);
      if (it == point.end())
        throw Error(ErrorKind::UnmappedVariable, "variable " + std::to_string(p.vars()[i]));
      int k = e[i];
      if (k % 2 != 0) {
        if (have_root[i] < 0) {
          auto [r, ok] = exact_sqrt(val[i]);
          have_root[i] = ok ? 1 : 0;
          root[i] = r;
        }
        if (!have_root[i])
          throw Error(ErrorKind::NonPerfectSquare,
                      "variable " + std::to_string(p.vars()[i]) + " = " + to_string(val[i]));
        Rational f = k > 0 ? root[i] : 1 / root[i];
        for (int j = 0; j < std::abs(k); ++j) t *= f;
      } else {
        Rational f = k > 0 ? val[i] : 1 / val[i];
        for (int j = 0; j < std::abs(k) / 2; ++j) t *= f;
      }
    }
    total += t;
  }
  return total;
}

namespace {

struct Style {
  std::string prefix;
  const std::map<int, std::string>* labels = nullptr;
  std::string separator = "*";

  std::string name(int id) const {
    if (labels) {
      auto it = labels->find(id);
      if (it != labels->end()) return prefix + "_" + it->second;
    }
    return prefix + "_" + std::to_string(id);
  }
};

std::string format_monomial(const std::vector<int>& vars, const Exponent& e, const Style& st) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out << st.separator;
    first = false;
    out << st.name(vars[i]);
    if (e[i] != 2) {
      if (e[i] % 2 == 0)
        out << "^" << (e[i] / 2 < 0 ? "(" + std::to_string(e[i] / 2) + ")" : std::to_string(e[i] / 2));
      else
        out << "^(" << e[i] << "/2)";
    }
  }
  return out.str();
}

std::string format_sum(const LaurentPoly& p, const Style& st) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest terms first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = format_monomial(p.vars(), e, st);
    Rational a = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a) << st.separator;
      out << mono;
    }
  }
  return out.str();
}

std::string format_styled(const LaurentPoly& p, const Style& st) {
  if (p.is_zero()) return "0";
  const std::size_t n = p.vars().size();
  Exponent den(n, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) den[i] = std::max(den[i], -e[i]);
  bool has_den = std::any_of(den.begin(), den.end(), [](int x) { return x != 0; });
  if (!has_den) return format_sum(p, st);
  if (p.is_monomial()) {
    const auto& [e, c] = *p.terms().begin();
    Exponent num(n);
    for (std::size_t i = 0; i < n; ++i) num[i] = e[i] + den[i];
    std::string top = format_sum(LaurentPoly::monomial(p.vars(), num, c), st);
    return top + "/" + format_monomial(p.vars(), den, st);
  }
  LaurentPoly num = p * LaurentPoly::monomial(p.vars(), den);
  return "(" + format_sum(num, st) + ")/" + format_monomial(p.vars(), den, st);
}

}  // namespace

std::string format(const LaurentPoly& p, const std::string& prefix) { return format_styled(p, Style{prefix}); }

std::string format(const LaurentPoly& p, const std::string& prefix, const std::map<int, std::string>& labels,
                   const std::string& separator) {
  return format_styled(p, Style{prefix, &labels, separator});
}

Fraction::Fraction(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1, num_.vars())) {}

Fraction::Fraction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::InvalidInput, "zero denominator");
  reduce();
}

void Fraction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1, num_.vars());
    return;
  }
  if (den_.is_monomial()) {
    num_ *= pow(den_, -1);
    den_ = LaurentPoly::constant(1, num_.vars());
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = *q;
    den_ = LaurentPoly::constant(1, num_.vars());
  }
}

LaurentPoly Fraction::laurent() const {
  if (!den_.is_monomial())
    throw Error(ErrorKind::NonMonomialInverse, "value is not a Laurent polynomial");
  return num_ * pow(den_, -1);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return Fraction(a.num_ + b.num_, a.den_);
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  // Cross-cancel when one denominator divides the other numerator exactly.
  LaurentPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  if (!d2.is_monomial())
    if (auto q = divide_exact(n1, d2)) {
      n1 = *q;
      d2 = LaurentPoly::constant(1, d2.vars());
    }
  if (!d1.is_monomial())
    if (auto q = divide_exact(n2, d1)) {
      n2 = *q;
      d1 = LaurentPoly::constant(1, d1.vars());
    }
  return Fraction(n1 * n2, d1 * d2);
}

Fraction Fraction::inverse() const {
  if (num_.is_zero()) throw Error(ErrorKind::InvalidInput, "inverse of zero");
  return Fraction(den_, num_);
}

Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.inverse(); }

bool operator==(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Fraction pow(const Fraction& f, int n) {
  if (n < 0) return pow(f.inverse(), -n);
  Fraction r(LaurentPoly::constant(1, f.num().vars()));
  for (int i = 0; i < n; ++i) r = r * f;
  return r;
}

Rational eval_positive(const Fraction& f, const std::map<int, Rational>& point) {
  return eval_positive(f.num(), point) / eval_positive(f.den(), point);
}

}  // namespace surfcluster
