#include "cotrace/rational.hpp"

#include <ostream>

#include "cotrace/error.hpp"

namespace cotrace {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::FunctorOnly: return "functor-only";
    case ErrorKind::MassOverflow: return "mass-overflow";
    case ErrorKind::KindMismatch: return "kind-mismatch";
    case ErrorKind::InvalidValue: return "invalid-value";
    case ErrorKind::UnknownSymbol: return "undeclared";
    case ErrorKind::SizeGuard: return "size-guard";
    case ErrorKind::ShapeMismatch: return "shape-mismatch";
    case ErrorKind::DepthUnderflow: return "depth-underflow";
    case ErrorKind::NotInitial: return "not-initial";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidValue, "zero denominator");
  v_ = mpq_class(numerator, denominator);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto digits_ok = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  Rational out;
  const mpz_class n{std::string(num)};
  const mpz_class d{std::string(den)};
  if (d == 0) throw bad();
  out.v_ = mpq_class(n, d);
  out.v_.canonicalize();
  return out;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::InvalidValue, "division by zero");
  v_ /= rhs.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace cotrace
