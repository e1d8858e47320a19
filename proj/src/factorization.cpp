#include "hyperfact/factorization.hpp"

#include <string>

#include "hyperfact/errors.hpp"

namespace hyperfact {

Poly factor_poly(const Factor& factor) {
  if (const auto* quad = std::get_if<QuadraticFactor>(&factor)) {
    return Poly({quad->a * quad->a, Rational(1)});
  }
  const auto& qf = std::get<QQuadraticFactor>(factor);
  const Rational tq = qf.t * pow(qf.q, static_cast<long>(qf.k) - 1);
  return Poly({Rational(1) + tq * tq, Rational(-2) * tq});
}

Rational factor_zero(const Factor& factor) {
  if (const auto* quad = std::get_if<QuadraticFactor>(&factor)) return -(quad->a * quad->a);
  const auto& qf = std::get<QQuadraticFactor>(factor);
  const Rational tq = qf.t * pow(qf.q, static_cast<long>(qf.k) - 1);
  return (tq + Rational(1) / tq) / Rational(2);
}

Poly FactorizationReport::expand() const {
  Poly product = Poly::constant(constant);
  for (const auto& f : factors) product *= factor_poly(f);
  return product * cofactor;
}

void check_reconstruction(const FactorizationReport& report, const Poly& original, std::string_view context) {
  if (report.expand() != original) {
    throw FactorizationMismatch(std::string(context) + ": expanded factorization differs from the direct polynomial");
  }
  for (const auto& z : report.zeros) {
    if (!original(z).is_zero()) {
      throw ZeroCheckFailed(std::string(context) + ": listed zero " + z.str() + " is not a root");
    }
  }
}

}  // namespace hyperfact
