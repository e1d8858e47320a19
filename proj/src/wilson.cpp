#include "hyperfact/wilson.hpp"

#include <string>

#include "hyperfact/errors.hpp"
#include "hyperfact/shifted.hpp"

namespace hyperfact {

namespace {

Rational parameter_sum(const WilsonParams& p) { return p.t[0] + p.t[1] + p.t[2] + p.t[3]; }

Rational monic_scale(const WilsonParams& p) {
  const long n = static_cast<long>(p.n);
  const Rational norm = pochhammer(Rational(n - 1) + parameter_sum(p), p.n);
  if (norm.is_zero()) throw PoleInNormalization("wilson: (n-1+t1+t2+t3+t4)_n vanishes");
  return (n % 2 == 0 ? Rational(1) : Rational(-1)) / norm;
}

void require_split_range(unsigned m, unsigned n) {
  if (m < 1 || m > n) throw InvalidSpec("wilson case 2 requires 1 <= m <= n");
}

}  // namespace

SeriesSpec wilson_series(const Rational& x, const WilsonParams& p) {
  const auto& t = p.t;
  const Rational rn(static_cast<long>(p.n));
  return SeriesSpec{SeriesKind::Ordinary,
                    {-rn, rn - Rational(1) + parameter_sum(p), PairParam{t[0], x}},
                    {t[0] + t[1], t[0] + t[2], t[0] + t[3]},
                    Rational(1),
                    Rational(0),
                    p.n};
}

Rational wilson_eval(const Rational& x, const WilsonParams& p) {
  const auto& t = p.t;
  const Rational series = eval_terminating(wilson_series(x, p));
  return pochhammer(t[0] + t[1], p.n) * pochhammer(t[0] + t[2], p.n) * pochhammer(t[0] + t[3], p.n) * series;
}

Poly wilson_poly(const WilsonParams& p) {
  validate(wilson_series(Rational(0), p));
  return eval_terminating_poly([&p](const Rational& x) { return wilson_eval(x, p); }, p.n);
}

Poly monic_wilson_poly(const WilsonParams& p) {
  const Rational scale = monic_scale(p);
  return wilson_poly(p) * scale;
}

FactorizationReport case1_factorize(const Rational& t1, const Rational& t2, const Rational& t3, unsigned n) {
  const WilsonParams p{{t1, t2, t3, Rational(1 - static_cast<long>(n)) - t3}, n};
  const Poly direct = monic_wilson_poly(p);

  FactorizationReport report;
  for (unsigned k = 1; k <= n; ++k) {
    const Factor f = QuadraticFactor{t3 + Rational(static_cast<long>(k) - 1)};
    report.factors.push_back(f);
    report.zeros.push_back(factor_zero(f));
  }
  check_reconstruction(report, direct, "wilson case 1");
  return report;
}

std::vector<Rational> case2_zeros(const Rational& t1, const Rational& t2, const Rational& t4, unsigned m, unsigned n) {
  require_split_range(m, n);
  const WilsonParams p{{t1, t2, Rational(1 - static_cast<long>(m)) - t4, t4}, n};
  std::vector<Rational> zeros;
  for (unsigned j = 1; j <= m; ++j) {
    const Rational shifted = t4 + Rational(static_cast<long>(j) - 1);
    const Rational x = -(shifted * shifted);
    if (!wilson_eval(x, p).is_zero()) {
      throw ZeroCheckFailed("wilson case 2: W_n does not vanish at x = " + x.str());
    }
    zeros.push_back(x);
  }
  return zeros;
}

FactorizationReport case2_split(const Rational& t1, const Rational& t2, const Rational& t4, unsigned m, unsigned n) {
  require_split_range(m, n);
  const long lm = static_cast<long>(m);
  const Poly direct = wilson_poly({{t1, t2, Rational(1 - lm) - t4, t4}, n});
  const Poly cofactor = wilson_poly({{t2, t1, Rational(1) - t4, t4 + Rational(lm)}, n - m});

  FactorizationReport report;
  report.cofactor = cofactor;
  for (unsigned j = 0; j < m; ++j) {
    const Factor f = QuadraticFactor{t4 + Rational(static_cast<long>(j))};
    report.factors.push_back(f);
    report.zeros.push_back(factor_zero(f));
  }
  if (cofactor.leading().is_zero()) {
    throw FactorizationMismatch("wilson case 2: cofactor polynomial is identically zero");
  }
  report.constant = direct.leading() / cofactor.leading();
  check_reconstruction(report, direct, "wilson case 2 split");
  return report;
}

}  // namespace hyperfact
