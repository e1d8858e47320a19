#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperfact {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper around GMP's mpq_class. Every constructor and
/// arithmetic operator leaves the value canonical, and division by zero
/// throws std::domain_error instead of aborting inside GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Parses "p/q" or "p" (optional leading '-'). Decimal or exponent
  /// notation is rejected with std::invalid_argument.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& gmp() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Always "numerator/denominator", integers included ("5/1").
  std::string str() const;
  /// Integers without the "/1" suffix; used for human-facing output.
  std::string pretty() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

/// base^exponent for any integer exponent; throws std::domain_error for
/// 0 raised to a negative power.
Rational pow(const Rational& base, long exponent);

Rational abs(const Rational& value);

/// Rational square root when value is the square of a rational.
bool exact_sqrt(const Rational& value, Rational& root);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace hyperfact

template <>
struct std::hash<hyperfact::Rational> {
  std::size_t operator()(const hyperfact::Rational& r) const {
    return std::hash<std::string>{}(r.str());
  }
};
