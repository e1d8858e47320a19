#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "hyperfact/poly.hpp"
#include "hyperfact/rational.hpp"

namespace hyperfact {

enum class SeriesKind { Ordinary, Basic };

/// Conjugate pair a +- i sqrt(x) (Ordinary) or t e^{+-i theta}, x = cos(theta)
/// (Basic). Occupies two numerator slots; its joint contribution is real.
struct PairParam {
  Rational base;
  Rational x;

  friend bool operator==(const PairParam&, const PairParam&) = default;
};

using NumParam = std::variant<Rational, PairParam>;

/// A terminating pFq (Ordinary) or basic r-phi-s (Basic) series.
///
/// Exactly one plain numerator parameter must equal -n (Ordinary) or
/// q^{-n} (Basic), so the sum has n+1 terms. For Basic series the implicit
/// (q;q)_k denominator is included, matching the usual b_0 = q convention.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::Ordinary;
  std::vector<NumParam> num;
  std::vector<Rational> den;
  Rational z{1};
  Rational q{0};
  unsigned n = 0;

  /// (p, s) slot counts; a pair counts twice.
  std::pair<std::size_t, std::size_t> arity() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
};

/// Throws InvalidSpec unless the spec terminates at n and no denominator
/// factor vanishes for k <= n.
void validate(const SeriesSpec& spec);

/// Exact sum by forward term recursion. Validates first.
Rational eval_terminating(const SeriesSpec& spec);

/// Reconstructs a polynomial in x of known degree from a family of specs
/// (plus an optional x-independent prefactor already folded in by the
/// caller) by exact interpolation at x = 0, 1, ..., degree.
Poly eval_terminating_poly(const std::function<Rational(const Rational&)>& at, unsigned degree);

/// Convenience overload: the polynomial is exactly the series value.
Poly eval_terminating_poly(const std::function<SeriesSpec(const Rational&)>& spec_at, unsigned degree);

}  // namespace hyperfact
