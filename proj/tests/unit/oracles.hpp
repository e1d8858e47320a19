#pragma once

// Test-only reference computations, deliberately built from scratch so they
// share no code path with the library routines they check.

#include <array>
#include <vector>

#include "hyperfact/poly.hpp"
#include "hyperfact/rational.hpp"
#include "hyperfact/sampler.hpp"
#include "hyperfact/series.hpp"
#include "hyperfact/shifted.hpp"

namespace oracle {

using hyperfact::Rational;

// Each term assembled independently from Pochhammer / q-shifted products.
inline Rational naive_series(const hyperfact::SeriesSpec& spec) {
  using hyperfact::PairParam;
  Rational sum(0);
  for (unsigned k = 0; k <= spec.n; ++k) {
    Rational num(1);
    Rational den(1);
    for (const auto& p : spec.num) {
      if (const auto* plain = std::get_if<Rational>(&p)) {
        num *= spec.kind == hyperfact::SeriesKind::Ordinary ? hyperfact::pochhammer(*plain, k)
                                                            : hyperfact::q_shifted(*plain, spec.q, k);
      } else {
        const auto& pair = std::get<PairParam>(p);
        num *= spec.kind == hyperfact::SeriesKind::Ordinary ? hyperfact::pochhammer_pair(pair.base, pair.x, k)
                                                            : hyperfact::q_shifted_pair(pair.base, pair.x, spec.q, k);
      }
    }
    for (const auto& b : spec.den) {
      den *= spec.kind == hyperfact::SeriesKind::Ordinary ? hyperfact::pochhammer(b, k)
                                                          : hyperfact::q_shifted(b, spec.q, k);
    }
    den *= spec.kind == hyperfact::SeriesKind::Ordinary ? hyperfact::pochhammer(Rational(1), k)
                                                        : hyperfact::q_shifted(spec.q, spec.q, k);
    sum += num / den * hyperfact::pow(spec.z, static_cast<long>(k));
  }
  return sum;
}

// Determinant by fraction-exact Gaussian elimination of x I - A, with A
// tridiagonal, diagonal alpha, super-diagonal 1 and sub-diagonal beta. Its
// determinant equals that of the symmetric form with off-diagonals sqrt(beta).
inline Rational tridiag_det_at(const std::vector<Rational>& alpha, const std::vector<Rational>& beta,
                               const Rational& x) {
  const std::size_t n = alpha.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = x - alpha[i];
    if (i + 1 < n) {
      m[i][i + 1] = Rational(-1);
      m[i + 1][i] = -beta[i];
    }
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline hyperfact::Poly product_of(const std::vector<hyperfact::Poly>& factors) {
  hyperfact::Poly p = hyperfact::Poly::constant(Rational(1));
  for (const auto& f : factors) p *= f;
  return p;
}

// prod_{k=1..count} (x + (a+k-1)^2)
inline hyperfact::Poly shifted_square_block(const Rational& a, unsigned count) {
  hyperfact::Poly p = hyperfact::Poly::constant(Rational(1));
  for (unsigned k = 0; k < count; ++k) {
    const Rational s = a + Rational(static_cast<long>(k));
    p *= hyperfact::Poly({s * s, Rational(1)});
  }
  return p;
}

}  // namespace oracle
