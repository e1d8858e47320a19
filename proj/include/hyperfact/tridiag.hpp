#pragma once

#include <optional>
#include <vector>

#include "hyperfact/poly.hpp"
#include "hyperfact/rational.hpp"

namespace hyperfact {

/// Jacobi-type data for a monic family: alpha_0..alpha_{N-1} on the
/// diagonal and beta_1..beta_{N-1} (stored 0-based) as the products of the
/// off-diagonal pairs. Any rational beta is allowed, zero included.
struct TridiagSpec {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  std::size_t size() const { return alpha.size(); }
};

/// Throws std::invalid_argument unless N >= 1 and beta has N-1 entries.
void validate(const TridiagSpec& spec);

/// Monic P_k from x P_j = P_{j+1} + alpha_j P_j + beta_j P_{j-1}, P_0 = 1, P_1 = x - alpha_0.
Poly recurrence_poly(const TridiagSpec& spec, std::size_t k);

/// det(x I - A_N), evaluated by the scalar cofactor recursion at N+1 nodes
/// and interpolated. Never needs sqrt(beta).
Poly det_poly(const TridiagSpec& spec);

/// Characteristic polynomials of the diagonal blocks left after cutting at
/// every zero beta; their product is det_poly(spec).
std::vector<Poly> split_on_zero_beta(const TridiagSpec& spec);

struct DiophantineReport {
  bool all_integer = false;
  bool equispaced = false;
  std::optional<Rational> spacing;
  // Same questions for r = sqrt(-x), when every zero is minus a rational square.
  bool sqrt_lattice = false;
  bool sqrt_equispaced = false;
  std::optional<Rational> sqrt_spacing;
};

/// Integer / equi-spacing test on a zero list. Input order does not matter.
DiophantineReport diophantine_check(std::vector<Rational> zeros);

}  // namespace hyperfact
