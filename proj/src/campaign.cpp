#include "hyperfact/campaign.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "hyperfact/askey_wilson.hpp"
#include "hyperfact/errors.hpp"
#include "hyperfact/identities.hpp"
#include "hyperfact/json_io.hpp"
#include "hyperfact/sampler.hpp"
#include "hyperfact/tridiag.hpp"
#include "hyperfact/wilson.hpp"

namespace hyperfact {

namespace {

struct CheckEntry {
  CheckKind kind;
  std::string_view name;
};

constexpr std::array<CheckEntry, 12> kChecks{{
    {CheckKind::Saalschutz, "saalschutz"},
    {CheckKind::KarlssonMinton, "karlsson-minton"},
    {CheckKind::FieldsWimp, "fields-wimp"},
    {CheckKind::Whipple, "whipple"},
    {CheckKind::QSaalschutz, "q-saalschutz"},
    {CheckKind::Sears, "sears"},
    {CheckKind::WilsonSymmetry, "wilson-symmetry"},
    {CheckKind::WilsonCase1, "wilson-case1"},
    {CheckKind::WilsonCase2, "wilson-case2"},
    {CheckKind::AskeyWilsonCase1, "aw-case1"},
    {CheckKind::AskeyWilsonCase2, "aw-case2"},
    {CheckKind::Tridiag, "tridiag"},
}};

constexpr std::array<CheckKind, 12> kAllKinds{
    CheckKind::Saalschutz,       CheckKind::KarlssonMinton,   CheckKind::FieldsWimp,  CheckKind::Whipple,
    CheckKind::QSaalschutz,      CheckKind::Sears,            CheckKind::WilsonSymmetry, CheckKind::WilsonCase1,
    CheckKind::WilsonCase2,      CheckKind::AskeyWilsonCase1, CheckKind::AskeyWilsonCase2, CheckKind::Tridiag};

Rational count(unsigned n) { return Rational(static_cast<long>(n)); }

void from_identity(TrialOutcome& out, const IdentityReport& report) {
  out.params = report.parameter_assignment;
  out.lhs = report.lhs;
  out.rhs = report.rhs;
  out.holds = report.holds;
}

std::vector<ShiftPair> draw_shifts(Sampler& s, unsigned r, unsigned budget) {
  std::vector<ShiftPair> pairs;
  unsigned left = budget;
  for (unsigned j = 0; j < r; ++j) {
    const unsigned shift = s.uniform(0, std::min(left, 5u));
    left -= shift;
    pairs.push_back({s.rational(), shift});
  }
  return pairs;
}

void trial_body(CheckKind kind, Sampler& s, const TrialLimits& lim, TrialOutcome& out) {
  switch (kind) {
    case CheckKind::Saalschutz: {
      const auto a = s.rational(), b = s.rational(), c = s.rational();
      from_identity(out, verify_saalschutz(a, b, c, s.uniform(0, lim.saalschutz_n)));
      return;
    }
    case CheckKind::KarlssonMinton: {
      const unsigned big_n = s.uniform(1, lim.karlsson_big_n);
      const unsigned r = s.uniform(0, lim.karlsson_r);
      const Rational b = s.rational();
      const auto pairs = draw_shifts(s, r, big_n);
      from_identity(out, verify_karlsson_minton(big_n, b, pairs));
      return;
    }
    case CheckKind::FieldsWimp: {
      const unsigned big_n = s.uniform(1, lim.karlsson_big_n);
      const unsigned r = s.uniform(0, lim.karlsson_r);
      const auto pairs = draw_shifts(s, r, big_n - 1);
      from_identity(out, verify_fields_wimp_vanishing(big_n, pairs));
      return;
    }
    case CheckKind::Whipple: {
      const unsigned n = s.uniform(0, lim.whipple_n);
      const auto a = s.rational(), b = s.rational(), c = s.rational(), d = s.rational(), e = s.rational();
      from_identity(out, verify_whipple(n, a, b, c, d, e));
      return;
    }
    case CheckKind::QSaalschutz: {
      const unsigned n = s.uniform(0, lim.q_series_n);
      const Rational q = s.unit_q();
      const auto a = s.nonzero_rational(), b = s.nonzero_rational(), c = s.nonzero_rational();
      from_identity(out, verify_q_saalschutz(a, b, c, q, n));
      return;
    }
    case CheckKind::Sears: {
      const unsigned n = s.uniform(0, lim.q_series_n);
      const Rational q = s.unit_q();
      const auto a = s.nonzero_rational(), b = s.nonzero_rational(), c = s.nonzero_rational();
      const auto d = s.nonzero_rational(), e = s.nonzero_rational();
      from_identity(out, verify_sears(n, a, b, c, d, e, q));
      return;
    }
    case CheckKind::WilsonSymmetry: {
      const unsigned n = s.uniform(0, lim.symmetry_n);
      const Rational x = s.rational();
      std::array<Rational, 4> t{s.rational(), s.rational(), s.rational(), s.rational()};
      out.params = {{"x", x}, {"t1", t[0]}, {"t2", t[1]}, {"t3", t[2]}, {"t4", t[3]}, {"n", count(n)}};
      const Rational base = wilson_eval(x, {t, n});
      std::array<int, 4> perm{0, 1, 2, 3};
      Rational other = base;
      unsigned evaluated = 0;
      do {
        const Rational v = wilson_eval(x, {{t[perm[0]], t[perm[1]], t[perm[2]], t[perm[3]]}, n});
        ++evaluated;
        if (v != base && other == base) other = v;
      } while (std::next_permutation(perm.begin(), perm.end()));
      out.lhs = base;
      out.rhs = other;
      out.holds = base == other;
      out.detail = Json{{"permutations", evaluated}};
      return;
    }
    case CheckKind::WilsonCase1: {
      const unsigned n = s.uniform(1, lim.wilson_case1_n);
      const auto t1 = s.rational(), t2 = s.rational(), t3 = s.rational();
      out.params = {{"t1", t1}, {"t2", t2}, {"t3", t3}, {"n", count(n)}};
      out.detail = to_json(case1_factorize(t1, t2, t3, n));
      out.holds = true;
      return;
    }
    case CheckKind::WilsonCase2: {
      const unsigned n = s.uniform(1, lim.wilson_case2_n);
      const unsigned m = s.uniform(1, n);
      const auto t1 = s.rational(), t2 = s.rational(), t4 = s.rational();
      out.params = {{"t1", t1}, {"t2", t2}, {"t4", t4}, {"m", count(m)}, {"n", count(n)}};
      Json detail{{"zeros", to_json(case2_zeros(t1, t2, t4, m, n))}};
      if (n <= lim.wilson_split_n) detail["split"] = to_json(case2_split(t1, t2, t4, m, n));
      out.detail = std::move(detail);
      out.holds = true;
      return;
    }
    case CheckKind::AskeyWilsonCase1: {
      const unsigned n = s.uniform(1, lim.askey_wilson_n);
      const Rational q = s.unit_q();
      const auto t1 = s.nonzero_rational(), t2 = s.nonzero_rational(), t3 = s.nonzero_rational();
      out.params = {{"t1", t1}, {"t2", t2}, {"t3", t3}, {"q", q}, {"n", count(n)}};
      out.detail = to_json(q_case1_factorize(t1, t2, t3, q, n));
      out.holds = true;
      return;
    }
    case CheckKind::AskeyWilsonCase2: {
      const unsigned n = s.uniform(1, lim.askey_wilson_n);
      const unsigned m = s.uniform(1, n);
      const Rational q = s.unit_q();
      const auto t1 = s.nonzero_rational(), t2 = s.nonzero_rational(), t4 = s.nonzero_rational();
      out.params = {{"t1", t1}, {"t2", t2}, {"t4", t4}, {"q", q}, {"m", count(m)}, {"n", count(n)}};
      const FactorizationReport report = q_case2_split(t1, t2, t4, q, m, n);
      const AWParams p{{t1, t2, pow(q, 1 - static_cast<long>(m)) / t4, t4}, q, n};
      bool zeros_vanish = true;
      for (const auto& z : q_lattice_zeros(t4, q, m)) zeros_vanish = zeros_vanish && aw_eval(z, p).is_zero();
      out.detail = to_json(report);
      out.holds = zeros_vanish;
      if (!zeros_vanish) out.error = "aw_eval is nonzero at a q-lattice zero";
      return;
    }
    case CheckKind::Tridiag: {
      const unsigned size = s.uniform(1, lim.tridiag_n);
      TridiagSpec spec;
      for (unsigned i = 0; i < size; ++i) spec.alpha.push_back(s.rational());
      for (unsigned i = 0; i + 1 < size; ++i) spec.beta.push_back(s.rational());
      if (size >= 2 && s.uniform(0, 1) == 1) spec.beta[s.uniform(0, size - 2)] = Rational(0);
      out.params = {{"N", count(size)}};
      const Poly det = det_poly(spec);
      const Poly rec = recurrence_poly(spec, size);
      const auto blocks = split_on_zero_beta(spec);
      Poly product = Poly::constant(Rational(1));
      for (const auto& b : blocks) product *= b;
      out.holds = det == rec && product == det && det.degree() == static_cast<int>(size) && det.leading() == Rational(1);
      Json detail{{"spec", to_json(spec)}, {"blocks", blocks.size()}};
      out.detail = std::move(detail);
      if (!out.holds) out.error = "determinant, recurrence and block product disagree";
      return;
    }
  }
  throw std::logic_error("unhandled check kind");
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  for (const auto& e : kChecks) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (const auto& e : kChecks) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

std::span<const CheckKind> all_checks() { return kAllKinds; }

TrialOutcome run_trial(CheckKind kind, std::uint64_t seed, std::uint64_t trial, const TrialLimits& limits) {
  Sampler sampler(seed, check_name(kind), trial);
  for (unsigned attempt = 0; attempt < limits.max_attempts; ++attempt) {
    TrialOutcome out;
    out.check = std::string(check_name(kind));
    out.trial = trial;
    try {
      trial_body(kind, sampler, limits, out);
      return out;
    } catch (const InvalidSpec&) {
    } catch (const PoleInRHS&) {
    } catch (const PoleInNormalization&) {
    } catch (const std::domain_error&) {
    } catch (const Error& failure) {
      // FactorizationMismatch / ZeroCheckFailed: a genuine failed check.
      out.holds = false;
      out.error = failure.what();
      return out;
    }
  }
  TrialOutcome out;
  out.check = std::string(check_name(kind));
  out.trial = trial;
  out.error = "no valid parameter draw within the attempt budget";
  return out;
}

std::vector<TrialOutcome> run_campaign(CheckKind kind, std::uint64_t seed, std::uint64_t count, unsigned threads,
                                       const TrialLimits& limits) {
  std::vector<TrialOutcome> results(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) results[i] = run_trial(kind, seed, i, limits);
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  if (workers == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace hyperfact
