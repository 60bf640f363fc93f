#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cotrace {

/// Exact, always-reduced arbitrary precision fraction backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit from integers is intended
  Rational(long numerator, long denominator);

  /// Accepts "p", "p/q" and "-p/q"; rejects zero denominators.
  static Rational parse(std::string_view text);

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& rhs) { v_ += rhs.v_; return *this; }
  Rational& operator-=(const Rational& rhs) { v_ -= rhs.v_; return *this; }
  Rational& operator*=(const Rational& rhs) { v_ *= rhs.v_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.v_, rhs.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.v_, rhs.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace cotrace
