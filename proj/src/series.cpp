#include "hyperfact/series.hpp"

#include <string>

#include "hyperfact/errors.hpp"

namespace hyperfact {

namespace {

bool terminates_at(const SeriesSpec& spec) {
  Rational target = spec.kind == SeriesKind::Ordinary ? Rational(-static_cast<long>(spec.n))
                                                      : pow(spec.q, -static_cast<long>(spec.n));
  for (const auto& p : spec.num) {
    if (const auto* plain = std::get_if<Rational>(&p); plain && *plain == target) return true;
  }
  return false;
}

// Per-step factor of term_{k+1}/term_k contributed by numerator parameters.
Rational numerator_step(const SeriesSpec& spec, unsigned k, const Rational& qk) {
  Rational factor(1);
  for (const auto& p : spec.num) {
    if (const auto* plain = std::get_if<Rational>(&p)) {
      if (spec.kind == SeriesKind::Ordinary) {
        factor *= *plain + Rational(static_cast<long>(k));
      } else {
        factor *= Rational(1) - *plain * qk;
      }
    } else {
      const auto& pair = std::get<PairParam>(p);
      if (spec.kind == SeriesKind::Ordinary) {
        const Rational shifted = pair.base + Rational(static_cast<long>(k));
        factor *= shifted * shifted + pair.x;
      } else {
        const Rational tqk = pair.base * qk;
        factor *= Rational(1) - Rational(2) * pair.x * tqk + tqk * tqk;
      }
    }
  }
  return factor;
}

Rational denominator_step(const SeriesSpec& spec, unsigned k, const Rational& qk) {
  Rational factor(1);
  if (spec.kind == SeriesKind::Ordinary) {
    for (const auto& b : spec.den) factor *= b + Rational(static_cast<long>(k));
    factor *= Rational(static_cast<long>(k) + 1);
  } else {
    for (const auto& b : spec.den) factor *= Rational(1) - b * qk;
    factor *= Rational(1) - qk * spec.q;
  }
  return factor;
}

}  // namespace

std::pair<std::size_t, std::size_t> SeriesSpec::arity() const {
  std::size_t p = 0;
  for (const auto& param : num) p += std::holds_alternative<PairParam>(param) ? 2 : 1;
  return {p, den.size()};
}

void validate(const SeriesSpec& spec) {
  if (spec.kind == SeriesKind::Basic) {
    if (spec.q.is_zero()) throw InvalidSpec("basic series with q = 0");
  }
  if (!terminates_at(spec)) {
    throw InvalidSpec("no numerator parameter terminates the series at n = " + std::to_string(spec.n));
  }
  Rational qk(1);
  for (unsigned k = 0; k < spec.n; ++k) {
    if (denominator_step(spec, k, qk).is_zero()) {
      throw InvalidSpec("denominator vanishes at summation index " + std::to_string(k + 1));
    }
    if (spec.kind == SeriesKind::Basic) qk *= spec.q;
  }
}

Rational eval_terminating(const SeriesSpec& spec) {
  validate(spec);
  Rational term(1);
  Rational sum(1);
  Rational qk(1);
  for (unsigned k = 0; k < spec.n; ++k) {
    term *= numerator_step(spec, k, qk) * spec.z;
    if (term.is_zero()) break;
    term /= denominator_step(spec, k, qk);
    sum += term;
    if (spec.kind == SeriesKind::Basic) qk *= spec.q;
  }
  return sum;
}

Poly eval_terminating_poly(const std::function<Rational(const Rational&)>& at, unsigned degree) {
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  nodes.reserve(degree + 1);
  values.reserve(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) {
    nodes.emplace_back(static_cast<long>(i));
    values.push_back(at(nodes.back()));
  }
  return Poly::interpolate(nodes, values);
}

Poly eval_terminating_poly(const std::function<SeriesSpec(const Rational&)>& spec_at, unsigned degree) {
  return eval_terminating_poly(
      std::function<Rational(const Rational&)>([&](const Rational& x) { return eval_terminating(spec_at(x)); }),
      degree);
}

}  // namespace hyperfact
