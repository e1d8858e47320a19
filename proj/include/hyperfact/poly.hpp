#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hyperfact/rational.hpp"

namespace hyperfact {

/// Dense univariate polynomial over the rationals in the spectral variable x.
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// The monomial x.
  static Poly x();

  /// Exact interpolation through (nodes[i], values[i]); nodes must be distinct.
  static Poly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& at) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& scale);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest power first, e.g. "x^2 - 1".
  std::string str() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace hyperfact
