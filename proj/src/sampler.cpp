#include "hyperfact/sampler.hpp"

#include <array>

namespace hyperfact {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::string_view stream, std::uint64_t trial) {
  const std::uint64_t tag = fnv1a(stream);
  const std::array<std::uint32_t, 6> words{
      static_cast<std::uint32_t>(seed),  static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(tag),   static_cast<std::uint32_t>(tag >> 32),
      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

Sampler::Sampler(std::uint64_t seed, std::string_view stream, std::uint64_t trial)
    : engine_(seeded_engine(seed, stream, trial)) {}

unsigned Sampler::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(engine_);
}

Rational Sampler::rational() {
  const long num = std::uniform_int_distribution<long>(-20, 20)(engine_);
  const long den = std::uniform_int_distribution<long>(1, 12)(engine_);
  return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Rational Sampler::unit_q() {
  const long den = std::uniform_int_distribution<long>(2, 8)(engine_);
  const long num = std::uniform_int_distribution<long>(1, den - 1)(engine_);
  return Rational(num, den);
}

}  // namespace hyperfact
