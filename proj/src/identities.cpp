#include "hyperfact/identities.hpp"

#include <string>

#include "hyperfact/errors.hpp"
#include "hyperfact/series.hpp"
#include "hyperfact/shifted.hpp"

namespace hyperfact {

namespace {

Rational checked_ratio(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) throw PoleInRHS(std::string(what) + ": vanishing denominator in closed form");
  return num / den;
}

IdentityReport make_report(std::string name, std::vector<std::pair<std::string, Rational>> params, Rational lhs,
                           Rational rhs) {
  IdentityReport report{std::move(name), std::move(params), std::move(lhs), std::move(rhs), false};
  report.holds = report.lhs == report.rhs;
  return report;
}

Rational ordinary_minus_n(unsigned n) { return Rational(-static_cast<long>(n)); }

SeriesSpec ordinary(std::vector<NumParam> num, std::vector<Rational> den, unsigned n) {
  return SeriesSpec{SeriesKind::Ordinary, std::move(num), std::move(den), Rational(1), Rational(0), n};
}

SeriesSpec basic(std::vector<NumParam> num, std::vector<Rational> den, const Rational& q, unsigned n) {
  return SeriesSpec{SeriesKind::Basic, std::move(num), std::move(den), q, q, n};
}

void append_pairs(std::vector<std::pair<std::string, Rational>>& params, std::span<const ShiftPair> pairs) {
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto idx = std::to_string(j + 1);
    params.emplace_back("B" + idx, pairs[j].base);
    params.emplace_back("m" + idx, Rational(static_cast<long>(pairs[j].shift)));
  }
}

}  // namespace

Rational saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
  const Rational den = pochhammer(c, n) * pochhammer(c - a - b, n);
  return checked_ratio(pochhammer(c - a, n) * pochhammer(c - b, n), den, "saalschutz");
}

IdentityReport verify_saalschutz(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
  const Rational second = Rational(1) + a + b - Rational(static_cast<long>(n)) - c;
  const Rational lhs = eval_terminating(ordinary({ordinary_minus_n(n), a, b}, {c, second}, n));
  return make_report("saalschutz", {{"A", a}, {"B", b}, {"C", c}, {"n", Rational(static_cast<long>(n))}}, lhs,
                     saalschutz_rhs(a, b, c, n));
}

Rational karlsson_minton_terminating_rhs(unsigned big_n, const Rational& b, std::span<const ShiftPair> pairs) {
  unsigned excess = 0;
  for (const auto& p : pairs) excess += p.shift;
  if (excess > big_n) throw InvalidSpec("karlsson-minton: N must be at least the sum of the shifts");
  Rational value = checked_ratio(factorial(big_n), pochhammer(b + Rational(1), big_n), "karlsson-minton");
  for (const auto& p : pairs) {
    value *= checked_ratio(pochhammer(p.base - b, p.shift), pochhammer(p.base, p.shift), "karlsson-minton");
  }
  return value;
}

IdentityReport verify_karlsson_minton(unsigned big_n, const Rational& b, std::span<const ShiftPair> pairs) {
  std::vector<NumParam> num{ordinary_minus_n(big_n), b};
  std::vector<Rational> den{b + Rational(1)};
  for (const auto& p : pairs) {
    num.emplace_back(p.base + Rational(static_cast<long>(p.shift)));
    den.push_back(p.base);
  }
  const Rational rhs = karlsson_minton_terminating_rhs(big_n, b, pairs);
  const Rational lhs = eval_terminating(ordinary(std::move(num), std::move(den), big_n));
  std::vector<std::pair<std::string, Rational>> params{{"N", Rational(static_cast<long>(big_n))}, {"B", b}};
  append_pairs(params, pairs);
  return make_report("karlsson_minton", std::move(params), lhs, rhs);
}

IdentityReport verify_fields_wimp_vanishing(unsigned big_n, std::span<const ShiftPair> pairs) {
  unsigned excess = 0;
  for (const auto& p : pairs) excess += p.shift;
  if (big_n <= excess) throw InvalidSpec("fields-wimp: N must exceed the sum of the shifts");
  std::vector<NumParam> num{ordinary_minus_n(big_n)};
  std::vector<Rational> den;
  for (const auto& p : pairs) {
    num.emplace_back(p.base + Rational(static_cast<long>(p.shift)));
    den.push_back(p.base);
  }
  const Rational lhs = eval_terminating(ordinary(std::move(num), std::move(den), big_n));
  std::vector<std::pair<std::string, Rational>> params{{"N", Rational(static_cast<long>(big_n))}};
  append_pairs(params, pairs);
  return make_report("fields_wimp", std::move(params), lhs, Rational(0));
}

IdentityReport verify_whipple(unsigned n, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& e) {
  const Rational rn(static_cast<long>(n));
  const Rational f = a + b + c + Rational(1) - rn - d - e;
  const Rational lhs = eval_terminating(ordinary({-rn, a, b, c}, {d, e, f}, n));
  const Rational shifted = a + Rational(1) - rn;
  const SeriesSpec right = ordinary({-rn, a, d - b, d - c}, {d, shifted - e, shifted - f}, n);
  const Rational prefactor =
      checked_ratio(pochhammer(e - a, n) * pochhammer(f - a, n), pochhammer(e, n) * pochhammer(f, n), "whipple");
  const Rational rhs = prefactor * eval_terminating(right);
  return make_report("whipple", {{"n", rn}, {"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}, {"F", f}}, lhs, rhs);
}

IdentityReport verify_q_saalschutz(const Rational& a, const Rational& b, const Rational& c, const Rational& q,
                                   unsigned n) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw InvalidSpec("q-saalschutz: A, B, C must be nonzero");
  const long ln = static_cast<long>(n);
  const Rational second = pow(q, 1 - ln) * a * b / c;
  const Rational lhs = eval_terminating(basic({pow(q, -ln), a, b}, {c, second}, q, n));
  const Rational rhs = checked_ratio(q_shifted(c / a, q, n) * q_shifted(c / b, q, n),
                                     q_shifted(c, q, n) * q_shifted(c / (a * b), q, n), "q-saalschutz");
  return make_report("q_saalschutz", {{"A", a}, {"B", b}, {"C", c}, {"q", q}, {"n", Rational(ln)}}, lhs, rhs);
}

IdentityReport verify_sears(unsigned n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& e, const Rational& q) {
  if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero() || e.is_zero()) {
    throw InvalidSpec("sears: A..E must be nonzero");
  }
  const long ln = static_cast<long>(n);
  const Rational qn1 = pow(q, 1 - ln);
  const Rational f = qn1 * a * b * c / (d * e);
  const Rational lhs = eval_terminating(basic({pow(q, -ln), a, b, c}, {d, e, f}, q, n));
  const SeriesSpec right = basic({pow(q, -ln), a, d / b, d / c}, {d, qn1 * a / e, qn1 * a / f}, q, n);
  const Rational prefactor = pow(a, ln) * checked_ratio(q_shifted(e / a, q, n) * q_shifted(f / a, q, n),
                                                        q_shifted(e, q, n) * q_shifted(f, q, n), "sears");
  const Rational rhs = prefactor * eval_terminating(right);
  return make_report("sears", {{"n", Rational(ln)}, {"A", a}, {"B", b}, {"C", c}, {"D", d}, {"E", e}, {"F", f}, {"q", q}},
                     lhs, rhs);
}

}  // namespace hyperfact
