#include "hyperfact/shifted.hpp"

namespace hyperfact {

Rational pochhammer(const Rational& a, unsigned n) {
  Rational result(1);
  Rational factor = a;
  for (unsigned k = 0; k < n; ++k) {
    result *= factor;
    factor += 1;
  }
  return result;
}

Rational pochhammer_pair(const Rational& a, const Rational& x, unsigned n) {
  Rational result(1);
  Rational shifted = a;
  for (unsigned j = 0; j < n; ++j) {
    result *= shifted * shifted + x;
    shifted += 1;
  }
  return result;
}

Rational q_shifted(const Rational& a, const Rational& q, unsigned n) {
  Rational result(1);
  Rational aqk = a;
  for (unsigned k = 0; k < n; ++k) {
    result *= Rational(1) - aqk;
    aqk *= q;
  }
  return result;
}

Rational q_shifted_pair(const Rational& t, const Rational& x, const Rational& q, unsigned n) {
  Rational result(1);
  Rational tqk = t;
  for (unsigned k = 0; k < n; ++k) {
    result *= Rational(1) - Rational(2) * x * tqk + tqk * tqk;
    tqk *= q;
  }
  return result;
}

Rational factorial(unsigned n) { return pochhammer(Rational(1), n); }

}  // namespace hyperfact
