#include "motbun/rational.hpp"

#include <cctype>
#include <ostream>

#include "motbun/error.hpp"

namespace motbun {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InsufficientDepth: return "InsufficientDepth";
    case ErrorKind::NegativeTwistInPoincare: return "NegativeTwistInPoincare";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::SingularModel: return "SingularModel";
    case ErrorKind::InconsistentCounts: return "InconsistentCounts";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::NonIntegralCount: return "NonIntegralCount";
    case ErrorKind::PoleAtTwist: return "PoleAtTwist";
    case ErrorKind::LaurentRequired: return "LaurentRequired";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::NegativeLength: return "NegativeLength";
    case ErrorKind::InsufficientCensus: return "InsufficientCensus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FileFormat: return "FileFormat";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rat::Rat(const Integer& num, const Integer& den) : v_(num, den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error(ErrorKind::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw Error(ErrorKind::InvalidArgument, "malformed number '" + std::string(whole) + "'");
  }
  std::string digits(s[0] == '+' ? s.substr(1) : s);
  return Integer(digits, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rat(parse_integer(text.substr(0, slash), text), parse_integer(text.substr(slash + 1), text));
  }
  long exponent = 0;
  std::string_view mantissa = text;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_integer(text.substr(e + 1), text).get_si();
    mantissa = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view frac = mantissa.substr(dot + 1);
    digits = std::string(mantissa.substr(0, dot)) + std::string(frac);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    exponent -= static_cast<long>(frac.size());
  } else {
    digits = std::string(mantissa);
  }
  Rat value(parse_integer(digits, text));
  return value * pow(Rat(10), exponent);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

Rat pow(const Rat& x, long e) {
  if (e < 0) {
    if (x.is_zero()) throw Error(ErrorKind::DivisionByZero, "zero to a negative power");
    return Rat(1) / pow(x, -e);
  }
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rat(n, d);
}

std::int64_t to_int64(const Rat& x) {
  if (!x.is_integer()) throw Error(ErrorKind::NonIntegralCount, "expected an integer, got " + x.str());
  if (!x.num().fits_slong_p()) throw Error(ErrorKind::TooLarge, "integer " + x.str() + " does not fit 64 bits");
  return x.num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace motbun
