#include <doctest.h>

#include <algorithm>
#include <array>

#include "hyperfact/errors.hpp"
#include "hyperfact/sampler.hpp"
#include "hyperfact/shifted.hpp"
#include "hyperfact/tridiag.hpp"
#include "hyperfact/wilson.hpp"
#include "oracles.hpp"

using namespace hyperfact;

TEST_CASE("wilson_eval samples") {
  CHECK(wilson_eval(Rational(3, 7), {{Rational(1), Rational(2), Rational(3), Rational(4)}, 0}) == Rational(1));
  CHECK(wilson_eval(Rational(0), {{Rational(1), Rational(1), Rational(1), Rational(1)}, 1}) == Rational(4));
  CHECK(wilson_eval(Rational(5), {{Rational(1), Rational(2), Rational(3), Rational(4)}, 2}) == Rational(-1512));
  CHECK(wilson_eval(Rational(-7, 9), {{Rational(1, 2), Rational(1, 3), Rational(-1, 4), Rational(2)}, 3}) ==
        Rational(4004482405L, 5038848L));
  // case 2 zero with m = n = 1: t3 = -t4, x = -t4^2
  const Rational t4(3, 5);
  CHECK(wilson_eval(-(t4 * t4), {{Rational(2, 7), Rational(-5, 3), -t4, t4}, 1}).is_zero());
}

TEST_CASE("monic normalization") {
  const Poly p = monic_wilson_poly({{Rational(1), Rational(2), Rational(3), Rational(4)}, 2});
  CHECK(p == Poly({Rational(424, 11), Rational(-15), Rational(1)}));
  CHECK(monic_wilson_poly({{Rational(1), Rational(2), Rational(3), Rational(4)}, 0}) == Poly::constant(Rational(1)));
  CHECK(monic_wilson_poly({{Rational(1), Rational(1), Rational(1), Rational(1)}, 1}).leading() == Rational(1));
  CHECK_THROWS_AS(monic_wilson_poly({{Rational(1), Rational(1), Rational(-1, 2), Rational(-3, 2)}, 1}),
                  PoleInNormalization);
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Sampler s(41, "monic", trial);
    const WilsonParams p{{s.rational(), s.rational(), s.rational(), s.rational()}, s.uniform(0, 10)};
    try {
      const Poly w = monic_wilson_poly(p);
      CHECK(w.degree() == static_cast<int>(p.n));
      CHECK(w.leading() == Rational(1));
    } catch (const InvalidSpec&) {
    } catch (const PoleInNormalization&) {
    }
  }
}

TEST_CASE("case 1 factorization") {
  SUBCASE("n = 1, t3 = 1/2") {
    const auto report = case1_factorize(Rational(2, 3), Rational(-1, 5), Rational(1, 2), 1);
    CHECK(report.expand() == Poly({Rational(1, 4), Rational(1)}));
    REQUIRE(report.zeros.size() == 1);
    CHECK(report.zeros[0] == Rational(-1, 4));
    CHECK(report.constant == Rational(1));
    CHECK(report.cofactor == Poly::constant(Rational(1)));
  }
  SUBCASE("t3 = 0 gives a zero at the origin") {
    const auto report = case1_factorize(Rational(1, 3), Rational(2, 7), Rational(0), 2);
    CHECK(std::find(report.zeros.begin(), report.zeros.end(), Rational(0)) != report.zeros.end());
  }
  SUBCASE("random parameters against an explicit product") {
    for (std::uint64_t trial = 0; trial < 15; ++trial) {
      Sampler s(43, "case1", trial);
      const Rational t1 = s.rational(), t2 = s.rational(), t3 = s.rational();
      const unsigned n = s.uniform(1, 10);
      const WilsonParams p{{t1, t2, t3, Rational(1 - static_cast<long>(n)) - t3}, n};
      try {
        const Poly direct = monic_wilson_poly(p);
        CHECK((direct - oracle::shifted_square_block(t3, n)).is_zero());
        const auto report = case1_factorize(t1, t2, t3, n);
        CHECK(report.zeros.front() == -(t3 * t3));
        if (n >= 2) CHECK(report.zeros[1] == -((t3 + Rational(1)) * (t3 + Rational(1))));
      } catch (const InvalidSpec&) {
      } catch (const PoleInNormalization&) {
      }
    }
  }
}

TEST_CASE("case 2 zeros") {
  const auto zeros = case2_zeros(Rational(1), Rational(2), Rational(1, 4), 2, 3);
  CHECK(zeros == std::vector<Rational>{Rational(-1, 16), Rational(-25, 16)});
  CHECK_THROWS_AS(case2_zeros(Rational(1), Rational(2), Rational(1, 4), 0, 3), InvalidSpec);
  CHECK_THROWS_AS(case2_zeros(Rational(1), Rational(2), Rational(1, 4), 4, 3), InvalidSpec);

  SUBCASE("m = n matches the complete factorization") {
    const auto all = case2_zeros(Rational(2, 3), Rational(-7, 4), Rational(5, 6), 4, 4);
    const auto split = case2_split(Rational(2, 3), Rational(-7, 4), Rational(5, 6), 4, 4);
    CHECK(all == split.zeros);
  }
  SUBCASE("t4 = (1-2n)/4 gives equi-spaced square roots") {
    const unsigned n = 4;
    const Rational t4(1 - 2 * static_cast<long>(n), 4);
    const auto z = case2_zeros(Rational(1, 3), Rational(2, 5), t4, n, n);
    const auto report = diophantine_check(z);
    CHECK(report.sqrt_lattice);
    CHECK(report.sqrt_equispaced);
    CHECK(*report.sqrt_spacing == Rational(1, 2));
  }
  SUBCASE("every listed zero vanishes for random parameters") {
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
      Sampler s(47, "case2z", trial);
      const Rational t1 = s.rational(), t2 = s.rational(), t4 = s.rational();
      for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
          try {
            const auto z = case2_zeros(t1, t2, t4, m, n);
            CHECK(z.size() == m);
          } catch (const InvalidSpec&) {
          }
        }
      }
    }
  }
}

TEST_CASE("case 2 split") {
  SUBCASE("m = n = 1") {
    const auto report = case2_split(Rational(3, 4), Rational(-2, 9), Rational(5, 3), 1, 1);
    CHECK(report.factors.size() == 1);
    CHECK(report.cofactor == Poly::constant(Rational(1)));
  }
  SUBCASE("m = n leaves a constant cofactor") {
    const auto report = case2_split(Rational(1, 7), Rational(2, 3), Rational(-3, 5), 3, 3);
    CHECK(report.cofactor.degree() == 0);
  }
  SUBCASE("random n = 4, m = 2 and the closed-form constant") {
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
      Sampler s(53, "split", trial);
      const Rational t1 = s.rational(), t2 = s.rational(), t4 = s.rational();
      const unsigned n = 4, m = 2;
      try {
        const auto report = case2_split(t1, t2, t4, m, n);
        const Poly direct = wilson_poly({{t1, t2, Rational(1 - static_cast<long>(m)) - t4, t4}, n});
        CHECK(report.expand() == direct);
        CHECK(report.cofactor == wilson_poly({{t2, t1, Rational(1) - t4, t4 + Rational(m)}, n - m}));
        CHECK(report.constant == Rational(1) * pochhammer(t1 + t2 + Rational(n - m), m));  // (-1)^m with m = 2
      } catch (const InvalidSpec&) {
      }
    }
  }
}

TEST_CASE("wilson polynomials are symmetric in their four parameters") {
  for (std::uint64_t trial = 0; trial < 6; ++trial) {
    Sampler s(59, "sym", trial);
    const std::array<Rational, 4> t{s.rational(), s.rational(), s.rational(), s.rational()};
    const Rational x = s.rational();
    const unsigned n = s.uniform(0, 8);
    try {
      const Rational base = wilson_eval(x, {t, n});
      std::array<int, 4> perm{0, 1, 2, 3};
      do {
        CHECK(wilson_eval(x, {{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]}, n}) == base);
      } while (std::next_permutation(perm.begin(), perm.end()));
    } catch (const InvalidSpec&) {
    }
  }
}
