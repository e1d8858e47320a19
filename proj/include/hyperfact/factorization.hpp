#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "hyperfact/poly.hpp"
#include "hyperfact/rational.hpp"

namespace hyperfact {

/// The factor x + a^2.
struct QuadraticFactor {
  Rational a;
};

/// The factor 1 - 2 t q^{k-1} x + t^2 q^{2k-2} (k >= 1).
struct QQuadraticFactor {
  Rational t;
  Rational q;
  unsigned k = 1;
};

using Factor = std::variant<QuadraticFactor, QQuadraticFactor>;

Poly factor_poly(const Factor& factor);
/// The unique zero in x of a factor.
Rational factor_zero(const Factor& factor);

/// original == constant * prod(factors) * cofactor, with zeros listed.
struct FactorizationReport {
  Rational constant{1};
  std::vector<Factor> factors;
  Poly cofactor = Poly::constant(Rational(1));
  std::vector<Rational> zeros;

  // Only set by the Askey-Wilson split, which also carries the closed-form
  // constant as printed in the literature for comparison.
  bool has_displayed_constant = false;
  Rational displayed_constant;
  bool displayed_constant_matches = false;

  Poly expand() const;
};

/// Throws FactorizationMismatch unless expand() equals original
/// coefficientwise, and ZeroCheckFailed unless every listed zero is a root.
void check_reconstruction(const FactorizationReport& report, const Poly& original, std::string_view context);

}  // namespace hyperfact
