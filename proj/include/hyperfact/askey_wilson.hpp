#pragma once

#include <array>
#include <vector>

#include "hyperfact/factorization.hpp"
#include "hyperfact/poly.hpp"
#include "hyperfact/series.hpp"

namespace hyperfact {

struct AWParams {
  std::array<Rational, 4> t;
  Rational q;
  unsigned n = 0;
};

/// Throws InvalidSpec for q in {0, 1, -1} or t1 = 0.
void validate(const AWParams& p);

/// The terminating balanced 4phi3 behind p_n, with (t1, x) as the q-pair.
SeriesSpec aw_series(const Rational& x, const AWParams& p);

/// p_n(x; t | q) = t1^{-n} prod_{j=2..4} (t1 tj; q)_n
///   * 4phi3(q^-n, t1 t2 t3 t4 q^{n-1}, t1 e^{+-i theta}; t1 t2, t1 t3, t1 t4; q, q),
/// x = cos(theta) treated as a formal variable.
Rational aw_eval(const Rational& x, const AWParams& p);

/// p_n as a polynomial in x (degree n).
Poly aw_poly(const AWParams& p);

/// (t q^{k-1} + 1/(t q^{k-1}))/2 for k = 1..m.
std::vector<Rational> q_lattice_zeros(const Rational& t, const Rational& q, unsigned m);

/// Complete factorization when t3 t4 = q^{1-n}:
/// p_n = c * prod_{k=1..n} (1 - 2 t3 q^{k-1} x + t3^2 q^{2k-2}).
/// The constant is fixed by leading-coefficient matching.
FactorizationReport q_case1_factorize(const Rational& t1, const Rational& t2, const Rational& t3, const Rational& q,
                                      unsigned n);

/// Split when t3 = q^{1-m}/t4:
/// p_n = c * prod_{k=1..m} (1 - 2 t4 q^{k-1} x + t4^2 q^{2k-2}) * p_{n-m}(x; t2, t1, q/t4, q^m t4).
FactorizationReport q_case2_split(const Rational& t1, const Rational& t2, const Rational& t4, const Rational& q,
                                  unsigned m, unsigned n);

}  // namespace hyperfact
