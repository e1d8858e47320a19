#include <doctest.h>

#include "hyperfact/askey_wilson.hpp"
#include "hyperfact/errors.hpp"
#include "hyperfact/identities.hpp"
#include "hyperfact/sampler.hpp"
#include "hyperfact/shifted.hpp"

using namespace hyperfact;

namespace {

Rational sign(unsigned k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

TEST_CASE("aw_eval samples") {
  const Rational h(1, 2);
  CHECK(aw_eval(Rational(7), {{h, h, h, h}, h, 0}) == Rational(1));
  CHECK(aw_eval(Rational(1), {{h, h, h, h}, h, 1}) == Rational(3, 8));
  CHECK(aw_eval(Rational(2, 3), {{h, Rational(1, 3), Rational(1, 4), Rational(3)}, Rational(1, 3), 2}) ==
        Rational(805, 1296));
  CHECK(aw_poly({{h, Rational(1, 3), Rational(1, 4), Rational(3)}, Rational(1, 3), 2}) ==
        Poly({Rational(6785, 1296), Rational(-3059, 324), Rational(1633, 432)}));
}

TEST_CASE("aw parameter validation") {
  const Rational h(1, 2);
  CHECK_THROWS_AS(aw_eval(Rational(0), {{h, h, h, h}, Rational(1), 1}), InvalidSpec);
  CHECK_THROWS_AS(aw_eval(Rational(0), {{h, h, h, h}, Rational(0), 1}), InvalidSpec);
  CHECK_THROWS_AS(aw_eval(Rational(0), {{Rational(0), h, h, h}, h, 1}), InvalidSpec);
}

TEST_CASE("q-case 2 zero of p_n at the first lattice point") {
  const Rational q(1, 3), t4(2, 5);
  for (unsigned m = 1; m <= 3; ++m) {
    const AWParams p{{Rational(3, 4), Rational(-1, 2), pow(q, 1 - static_cast<long>(m)) / t4, t4}, q, 3};
    CHECK(aw_eval((t4 + Rational(1) / t4) / Rational(2), p).is_zero());
  }
}

TEST_CASE("q-lattice zeros") {
  CHECK(q_lattice_zeros(Rational(1), Rational(2, 7), 1) == std::vector<Rational>{Rational(1)});
  CHECK(q_lattice_zeros(Rational(1, 2), Rational(1, 4), 1) == std::vector<Rational>{Rational(5, 4)});
  const Rational t(3, 7), q(2, 5);
  for (const auto& z : q_lattice_zeros(t, q, 5)) CHECK(q_shifted_pair(t, z, q, 5).is_zero());
  CHECK_THROWS_AS(q_lattice_zeros(Rational(0), q, 2), InvalidSpec);
}

TEST_CASE("q-case 1 factorization") {
  SUBCASE("n = 1") {
    const auto report = q_case1_factorize(Rational(1, 3), Rational(2, 5), Rational(1, 2), Rational(1, 2), 1);
    REQUIRE(report.factors.size() == 1);
    const Poly factor = factor_poly(report.factors[0]);
    CHECK(factor == Poly({Rational(5, 4), Rational(-1)}));
    CHECK(report.zeros == std::vector<Rational>{Rational(5, 4)});
  }
  SUBCASE("random parameters, closed-form constant") {
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
      Sampler s(61, "qcase1", trial);
      const Rational t1 = s.nonzero_rational(), t2 = s.nonzero_rational(), t3 = s.nonzero_rational();
      const Rational q = s.unit_q();
      const unsigned n = s.uniform(1, 6);
      try {
        const auto report = q_case1_factorize(t1, t2, t3, q, n);
        const Rational expected = sign(n) * pow(t3, -static_cast<long>(n)) * pow(q, -choose2(n)) * q_shifted(t1 * t2, q, n);
        CHECK(report.constant == expected);
        CHECK(report.zeros[0] == (t3 + Rational(1) / t3) / Rational(2));
        if (n >= 2) CHECK(report.zeros[1] == (t3 * q + Rational(1) / (t3 * q)) / Rational(2));
      } catch (const InvalidSpec&) {
      }
    }
  }
  SUBCASE("each q-quadratic is palindromic under t -> 1/t") {
    const Rational u(3, 7);
    const Poly f = factor_poly(QQuadraticFactor{u, Rational(1, 2), 1});
    const Poly g = factor_poly(QQuadraticFactor{Rational(1) / u, Rational(1, 2), 1});
    CHECK(f == g * (u * u));
  }
}

TEST_CASE("q-case 2 split") {
  SUBCASE("m = n leaves a constant cofactor") {
    const auto report = q_case2_split(Rational(2, 3), Rational(-1, 4), Rational(3, 5), Rational(1, 2), 3, 3);
    CHECK(report.cofactor.degree() == 0);
    CHECK(report.zeros.size() == 3);
  }
  SUBCASE("random draws: closed-form constant, lattice zeros, printed constant") {
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
      Sampler s(67, "qcase2", trial);
      const Rational t1 = s.nonzero_rational(), t2 = s.nonzero_rational(), t4 = s.nonzero_rational();
      const Rational q = trial % 2 == 0 ? Rational(1, 3) : s.unit_q();
      const unsigned n = s.uniform(1, 6);
      const unsigned m = s.uniform(1, n);
      try {
        const auto report = q_case2_split(t1, t2, t4, q, m, n);
        const Rational expected = sign(m) * pow(t4, -static_cast<long>(m)) * pow(q, -choose2(m)) *
                                  q_shifted(t1 * t2 * pow(q, static_cast<long>(n - m)), q, m);
        CHECK(report.constant == expected);
        CHECK(report.zeros == q_lattice_zeros(t4, q, m));
        const AWParams p{{t1, t2, pow(q, 1 - static_cast<long>(m)) / t4, t4}, q, n};
        for (const auto& z : report.zeros) CHECK(aw_eval(z, p).is_zero());
        CHECK(report.cofactor.degree() == static_cast<int>(n - m));
      } catch (const InvalidSpec&) {
      }
    }
  }
  SUBCASE("the printed constant does not reproduce p_n") {
    const auto report = q_case2_split(Rational(-1, 3), Rational(2, 5), Rational(3, 7), Rational(1, 3), 1, 2);
    CHECK(report.has_displayed_constant);
    CHECK_FALSE(report.displayed_constant_matches);
    CHECK(report.constant == Rational(-329, 135));
  }
  SUBCASE("bad split range") {
    CHECK_THROWS_AS(q_case2_split(Rational(1, 3), Rational(2, 5), Rational(3, 7), Rational(1, 3), 0, 2), InvalidSpec);
  }
}

TEST_CASE("sears steps of the double transformation hold at q-case 2 parameters") {
  // e^{i theta} is replaced by a formal rational u, x = (u + 1/u)/2.
  int checked = 0;
  for (std::uint64_t trial = 0; checked < 20 && trial < 2000; ++trial) {
    Sampler s(71, "sears-chain", trial);
    const Rational t1 = s.nonzero_rational(), t2 = s.nonzero_rational(), t4 = s.nonzero_rational();
    const Rational u = s.nonzero_rational();
    const Rational q = s.unit_q();
    const unsigned n = s.uniform(1, 6);
    const unsigned m = s.uniform(1, n);
    const long ln = static_cast<long>(n), lm = static_cast<long>(m);
    try {
      const auto first = verify_sears(n, t1 * u, pow(q, ln - lm) * t1 * t2, t1 / u, t1 * t2, pow(q, 1 - lm) * t1 / t4, q);
      CHECK(first.holds);
      CHECK(first.parameter_assignment[6].second == t1 * t4);  // F
      const auto second = verify_sears(n - m, t2 * u, t1 * u, pow(q, -ln), t1 * t2, pow(q, lm - ln) * t4 * u, q);
      CHECK(second.holds);
      CHECK(second.parameter_assignment[6].second == pow(q, 1 - ln) * u / t4);
      ++checked;
    } catch (const InvalidSpec&) {
    } catch (const PoleInRHS&) {
    }
  }
  CHECK(checked == 20);
}
