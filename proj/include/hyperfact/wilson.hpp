#pragma once

#include <array>
#include <vector>

#include "hyperfact/factorization.hpp"
#include "hyperfact/poly.hpp"
#include "hyperfact/series.hpp"

namespace hyperfact {

struct WilsonParams {
  std::array<Rational, 4> t;
  unsigned n = 0;
};

/// The terminating balanced 4F3 behind W_n, with (t1, x) as the pair.
SeriesSpec wilson_series(const Rational& x, const WilsonParams& p);

/// W_n(x; t) = prod_{j=2..4} (t1+tj)_n * 4F3(-n, n-1+sum t, t1 +- i sqrt(x); t1+t2, t1+t3, t1+t4; 1).
Rational wilson_eval(const Rational& x, const WilsonParams& p);

/// W_n as a polynomial in x (degree n).
Poly wilson_poly(const WilsonParams& p);

/// (-1)^n / (n-1+sum t)_n * W_n; leading coefficient 1. Throws PoleInNormalization.
Poly monic_wilson_poly(const WilsonParams& p);

/// With t4 = 1-n-t3 the monic polynomial is prod_{k=1..n} (x + (t3+k-1)^2).
FactorizationReport case1_factorize(const Rational& t1, const Rational& t2, const Rational& t3, unsigned n);

/// With t3 = 1-m-t4, W_n vanishes at x = -(t4+j-1)^2 for j = 1..m.
/// Each zero is checked by direct evaluation (ZeroCheckFailed otherwise).
std::vector<Rational> case2_zeros(const Rational& t1, const Rational& t2, const Rational& t4, unsigned m, unsigned n);

/// W_n(x; t1, t2, 1-t4-m, t4) = c * prod_{j<m} (x + (t4+j)^2) * W_{n-m}(x; t2, t1, 1-t4, t4+m).
/// The constant is fixed by matching leading coefficients.
FactorizationReport case2_split(const Rational& t1, const Rational& t2, const Rational& t4, unsigned m, unsigned n);

}  // namespace hyperfact
