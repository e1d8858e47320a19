#include "hyperfact/poly.hpp"

#include <stdexcept>
#include <utility>

namespace hyperfact {

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

// Newton divided differences, then expansion of the Newton form by Horner.
Poly Poly::interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size()) {
    throw std::invalid_argument("interpolate: node/value count mismatch");
  }
  const std::size_t count = nodes.size();
  std::vector<Rational> diff(values.begin(), values.end());
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      const Rational span = nodes[i] - nodes[i - level];
      if (span.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      diff[i] = (diff[i] - diff[i - 1]) / span;
    }
  }
  Poly result;
  for (std::size_t i = count; i-- > 0;) {
    result *= Poly({-nodes[i], Rational(1)});
    result += Poly::constant(diff[i]);
  }
  return result;
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool first = out.empty();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (k == 0) {
      out += mag.pretty();
      continue;
    }
    if (!unit) out += mag.pretty() + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace hyperfact
