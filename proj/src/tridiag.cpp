#include "hyperfact/tridiag.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperfact {

namespace {

Rational char_value(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, std::size_t begin,
                    std::size_t end, const Rational& x) {
  Rational prev(1);
  Rational cur = x - alpha[begin];
  for (std::size_t i = begin + 1; i < end; ++i) {
    Rational next = (x - alpha[i]) * cur - beta[i - 1] * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly block_poly(const TridiagSpec& spec, std::size_t begin, std::size_t end) {
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  for (std::size_t i = 0; i <= end - begin; ++i) {
    nodes.emplace_back(static_cast<long>(i));
    values.push_back(char_value(spec.alpha, spec.beta, begin, end, nodes.back()));
  }
  return Poly::interpolate(nodes, values);
}

std::optional<Rational> common_step(const std::vector<Rational>& sorted) {
  if (sorted.size() < 2) return std::nullopt;
  const Rational step = sorted[1] - sorted[0];
  for (std::size_t i = 2; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] != step) return std::nullopt;
  }
  return step;
}

}  // namespace

void validate(const TridiagSpec& spec) {
  if (spec.alpha.empty()) throw std::invalid_argument("tridiag: N must be at least 1");
  if (spec.beta.size() + 1 != spec.alpha.size()) {
    throw std::invalid_argument("tridiag: expected " + std::to_string(spec.alpha.size() - 1) + " beta entries, got " +
                                std::to_string(spec.beta.size()));
  }
}

Poly recurrence_poly(const TridiagSpec& spec, std::size_t k) {
  validate(spec);
  if (k > spec.size()) throw std::invalid_argument("tridiag: k exceeds N");
  Poly prev = Poly::constant(Rational(1));
  if (k == 0) return prev;
  Poly cur({-spec.alpha[0], Rational(1)});
  for (std::size_t j = 1; j < k; ++j) {
    Poly next = Poly({-spec.alpha[j], Rational(1)}) * cur - prev * spec.beta[j - 1];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly det_poly(const TridiagSpec& spec) {
  validate(spec);
  return block_poly(spec, 0, spec.size());
}

std::vector<Poly> split_on_zero_beta(const TridiagSpec& spec) {
  validate(spec);
  std::vector<Poly> blocks;
  std::size_t begin = 0;
  for (std::size_t k = 0; k < spec.beta.size(); ++k) {
    // beta[k] couples rows k and k+1.
    if (spec.beta[k].is_zero()) {
      blocks.push_back(block_poly(spec, begin, k + 1));
      begin = k + 1;
    }
  }
  blocks.push_back(block_poly(spec, begin, spec.size()));
  return blocks;
}

DiophantineReport diophantine_check(std::vector<Rational> zeros) {
  if (zeros.empty()) throw std::invalid_argument("diophantine_check: empty zero list");
  std::sort(zeros.begin(), zeros.end());

  DiophantineReport report;
  report.all_integer = std::all_of(zeros.begin(), zeros.end(), [](const Rational& z) { return z.is_integer(); });
  report.spacing = common_step(zeros);
  report.equispaced = zeros.size() == 1 || report.spacing.has_value();

  std::vector<Rational> roots;
  for (const auto& z : zeros) {
    Rational r;
    if (z.sign() > 0 || !exact_sqrt(-z, r)) return report;
    roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  report.sqrt_lattice = true;
  report.sqrt_spacing = common_step(roots);
  report.sqrt_equispaced = roots.size() == 1 || report.sqrt_spacing.has_value();
  return report;
}

}  // namespace hyperfact
