#pragma once

#include "hyperfact/rational.hpp"

namespace hyperfact {

// Rising and q-shifted factorials. All are total: an empty product is 1.

/// (a)_n = a (a+1) ... (a+n-1).
Rational pochhammer(const Rational& a, unsigned n);

/// (a + i sqrt(x))_n (a - i sqrt(x))_n = prod_{j<n} ((a+j)^2 + x).
/// Real and rational for any rational x; negative x means sqrt(x) is
/// imaginary and the pair splits into two real Pochhammer symbols.
Rational pochhammer_pair(const Rational& a, const Rational& x, unsigned n);

/// (a;q)_n = prod_{k=1..n} (1 - a q^{k-1}).
Rational q_shifted(const Rational& a, const Rational& q, unsigned n);

/// (t e^{i theta};q)_n (t e^{-i theta};q)_n at x = cos(theta):
/// prod_{k=1..n} (1 - 2 t x q^{k-1} + t^2 q^{2k-2}). x is formal.
Rational q_shifted_pair(const Rational& t, const Rational& x, const Rational& q, unsigned n);

/// n!
Rational factorial(unsigned n);

/// Binomial coefficient C(n, 2) as used in q-power bookkeeping.
inline long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace hyperfact
