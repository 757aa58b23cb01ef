#include "surfcluster/rational.hpp"

#include "surfcluster/error.hpp"

namespace surfcluster {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::WouldSelfFold: return "WouldSelfFold";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::SameEdge: return "SameEdge";
    case ErrorKind::NonMonomialInverse: return "NonMonomialInverse";
    case ErrorKind::UnmappedVariable: return "UnmappedVariable";
    case ErrorKind::NoUniqueLowestTerm: return "NoUniqueLowestTerm";
    case ErrorKind::NonPerfectSquare: return "NonPerfectSquare";
    case ErrorKind::NotMinimalPosition: return "NotMinimalPosition";
    case ErrorKind::EndpointAtPuncture: return "EndpointAtPuncture";
    case ErrorKind::NotBoundaryEnded: return "NotBoundaryEnded";
    case ErrorKind::NonIntegerInput: return "NonIntegerInput";
    case ErrorKind::NotLoop: return "NotLoop";
    case ErrorKind::PuncturedSurfaceUnsupported: return "PuncturedSurfaceUnsupported";
    case ErrorKind::IncompatibleArcs: return "IncompatibleArcs";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::NegativePinningSum: return "NegativePinningSum";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_kind_name(kind)) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      detail_(detail) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  return Rational(num, den);
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::runtime_error&) {
    throw Error(ErrorKind::InvalidInput, "not a rational: " + text);
  }
}

std::string to_string(const Rational& r) { return r.str(); }
std::string to_string(const Integer& z) { return z.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Integer floor_of(const Rational& r) {
  Integer n = numerator(r), d = denominator(r);
  Integer q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

std::pair<Rational, bool> exact_sqrt(const Rational& r) {
  if (r < 0) return {Rational(0), false};
  Integer n = numerator(r), d = denominator(r);
  Integer sn = sqrt(n), sd = sqrt(d);
  if (sn * sn != n || sd * sd != d) return {Rational(0), false};
  return {Rational(sn, sd), true};
}

}  // namespace surfcluster
