#include <doctest.h>

#include "hyperfact/sampler.hpp"
#include "hyperfact/shifted.hpp"

using namespace hyperfact;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(Rational(3, 7), 0) == Rational(1));
  CHECK(pochhammer(Rational(1), 4) == Rational(24));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-5), 6) == Rational(0));
  CHECK(pochhammer(Rational(-5), 5) == Rational(-120));
}

TEST_CASE("pochhammer_pair examples") {
  CHECK(pochhammer_pair(Rational(2), Rational(-9), 0) == Rational(1));
  CHECK(pochhammer_pair(Rational(1), Rational(3), 1) == Rational(4));
  CHECK(pochhammer_pair(Rational(1, 2), Rational(0), 2) == Rational(9, 16));
}

TEST_CASE("q_shifted examples") {
  CHECK(q_shifted(Rational(5), Rational(1, 3), 0) == Rational(1));
  CHECK(q_shifted(Rational(1, 2), Rational(1, 2), 2) == Rational(3, 8));
  // (a q^-n; q)_n = (q/a; q)_n (-a)^n q^{-C(n+1,2)} at (a, q, n) = (2, 1/3, 2)
  const Rational a(2), q(1, 3);
  const Rational lhs = q_shifted(a * pow(q, -2), q, 2);
  const Rational rhs = q_shifted(q / a, q, 2) * pow(-a, 2) * pow(q, -3);
  CHECK(lhs == rhs);
  CHECK(lhs == Rational(85));  // (1-18)(1-6)
}

TEST_CASE("q_shifted_pair examples") {
  CHECK(q_shifted_pair(Rational(3), Rational(1, 5), Rational(1, 2), 0) == Rational(1));
  CHECK(q_shifted_pair(Rational(1), Rational(1), Rational(1, 7), 1) == Rational(0));
  CHECK(q_shifted_pair(Rational(1, 2), Rational(1, 4), Rational(1, 2), 1) == Rational(1));
}

TEST_CASE("pochhammer recurrence and splitting identities hold for random rationals") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Sampler s(11, "pochhammer", trial);
    const Rational alpha = s.rational();
    const unsigned n = s.uniform(0, 30);
    if (n >= 1) CHECK(pochhammer(alpha, n) == pochhammer(alpha, n - 1) * (alpha + Rational(n - 1)));
    const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(pochhammer(alpha + Rational(1), n) == sign * pochhammer(-alpha - Rational(n), n));
    const unsigned m = s.uniform(0, n);
    CHECK(pochhammer(alpha, n) == pochhammer(alpha, m) * pochhammer(alpha + Rational(m), n - m));
  }
}

TEST_CASE("q-shift identities hold for all 0 <= k <= n <= 20") {
  for (std::uint64_t trial = 0; trial < 12; ++trial) {
    Sampler s(5, "qshift", trial);
    const Rational a = s.nonzero_rational();
    const Rational q = s.nonzero_rational();
    if (q == Rational(1) || q == Rational(-1)) continue;
    for (long n = 0; n <= 20; ++n) {
      const Rational base = a * pow(q, -n);
      for (long k = 0; k <= n; ++k) {
        const Rational lhs = q_shifted(base, q, static_cast<unsigned>(n - k));
        const Rational qa = q_shifted(q / a, q, static_cast<unsigned>(k));
        if (qa.is_zero()) continue;
        const Rational rhs = q_shifted(q / a, q, static_cast<unsigned>(n)) / qa * pow(-a, n - k) *
                             pow(q, choose2(k + 1) - choose2(n + 1));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("conjugate pair degenerates to two real pochhammers when x = -s^2") {
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Sampler s(3, "pair", trial);
    const Rational a = s.rational();
    const Rational root = s.rational();
    const unsigned n = s.uniform(0, 15);
    CHECK(pochhammer_pair(a, -(root * root), n) == pochhammer(a + root, n) * pochhammer(a - root, n));
  }
}
