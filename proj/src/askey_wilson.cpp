#include "hyperfact/askey_wilson.hpp"

#include "hyperfact/errors.hpp"
#include "hyperfact/shifted.hpp"

namespace hyperfact {

void validate(const AWParams& p) {
  if (p.q.is_zero() || p.q == Rational(1) || p.q == Rational(-1)) {
    throw InvalidSpec("askey-wilson: q must avoid 0 and +-1");
  }
  if (p.t[0].is_zero()) throw InvalidSpec("askey-wilson: t1 must be nonzero");
}

SeriesSpec aw_series(const Rational& x, const AWParams& p) {
  const auto& t = p.t;
  const long n = static_cast<long>(p.n);
  return SeriesSpec{SeriesKind::Basic,
                    {pow(p.q, -n), t[0] * t[1] * t[2] * t[3] * pow(p.q, n - 1), PairParam{t[0], x}},
                    {t[0] * t[1], t[0] * t[2], t[0] * t[3]},
                    p.q,
                    p.q,
                    p.n};
}

Rational aw_eval(const Rational& x, const AWParams& p) {
  validate(p);
  const auto& t = p.t;
  const Rational series = eval_terminating(aw_series(x, p));
  const Rational prefactor = pow(t[0], -static_cast<long>(p.n)) * q_shifted(t[0] * t[1], p.q, p.n) *
                             q_shifted(t[0] * t[2], p.q, p.n) * q_shifted(t[0] * t[3], p.q, p.n);
  return prefactor * series;
}

Poly aw_poly(const AWParams& p) {
  validate(p);
  hyperfact::validate(aw_series(Rational(0), p));
  return eval_terminating_poly([&p](const Rational& x) { return aw_eval(x, p); }, p.n);
}

std::vector<Rational> q_lattice_zeros(const Rational& t, const Rational& q, unsigned m) {
  if (t.is_zero() || q.is_zero()) throw InvalidSpec("q-lattice: t and q must be nonzero");
  std::vector<Rational> zeros;
  Rational tq = t;
  for (unsigned k = 1; k <= m; ++k) {
    zeros.push_back((tq + Rational(1) / tq) / Rational(2));
    tq *= q;
  }
  return zeros;
}

namespace {

FactorizationReport q_block(const Rational& t, const Rational& q, unsigned count) {
  FactorizationReport report;
  for (unsigned k = 1; k <= count; ++k) report.factors.push_back(QQuadraticFactor{t, q, k});
  report.zeros = q_lattice_zeros(t, q, count);
  return report;
}

Rational block_leading(const FactorizationReport& report) {
  Rational lead(1);
  for (const auto& f : report.factors) lead *= factor_poly(f).leading();
  return lead;
}

}  // namespace

FactorizationReport q_case1_factorize(const Rational& t1, const Rational& t2, const Rational& t3, const Rational& q,
                                      unsigned n) {
  if (t3.is_zero()) throw InvalidSpec("askey-wilson case 1: t3 must be nonzero");
  const AWParams p{{t1, t2, t3, pow(q, 1 - static_cast<long>(n)) / t3}, q, n};
  const Poly direct = aw_poly(p);

  FactorizationReport report = q_block(t3, q, n);
  report.constant = direct.leading() / block_leading(report);
  check_reconstruction(report, direct, "askey-wilson case 1");
  return report;
}

FactorizationReport q_case2_split(const Rational& t1, const Rational& t2, const Rational& t4, const Rational& q,
                                  unsigned m, unsigned n) {
  if (m < 1 || m > n) throw InvalidSpec("askey-wilson case 2 requires 1 <= m <= n");
  if (t4.is_zero() || t2.is_zero()) throw InvalidSpec("askey-wilson case 2: t2 and t4 must be nonzero");
  const long lm = static_cast<long>(m);
  const long ln = static_cast<long>(n);
  const AWParams p{{t1, t2, pow(q, 1 - lm) / t4, t4}, q, n};
  const Poly direct = aw_poly(p);
  const Poly cofactor = aw_poly({{t2, t1, q / t4, pow(q, lm) * t4}, q, n - m});
  if (cofactor.leading().is_zero()) {
    throw FactorizationMismatch("askey-wilson case 2: cofactor polynomial is identically zero");
  }

  FactorizationReport report = q_block(t4, q, m);
  report.cofactor = cofactor;
  report.constant = direct.leading() / (block_leading(report) * cofactor.leading());

  // Closed form as printed alongside the double-Sears derivation.
  const Rational denom = q_shifted(pow(q, lm) * t1 * t4, q, n - m);
  if (!denom.is_zero()) {
    report.has_displayed_constant = true;
    report.displayed_constant = (lm % 2 == 0 ? Rational(1) : Rational(-1)) * pow(t4, ln - 2 * lm) *
                                pow(t2, lm - ln) * q_shifted(pow(q, lm) * t1 * t2, q, n - m) / denom;
    report.displayed_constant_matches = report.displayed_constant == report.constant;
  }
  check_reconstruction(report, direct, "askey-wilson case 2 split");
  return report;
}

}  // namespace hyperfact
