#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperfact/rational.hpp"

namespace hyperfact {

/// Outcome of checking one summation theorem or transformation at one
/// parameter point. holds is exactly (lhs == rhs).
struct IdentityReport {
  std::string identity_name;
  std::vector<std::pair<std::string, Rational>> parameter_assignment;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// (B_j, m_j) entries of the Karlsson-Minton / Fields-Wimp families.
struct ShiftPair {
  Rational base;
  unsigned shift = 0;
};

/// (C-A)_n (C-B)_n / ((C)_n (C-A-B)_n). Throws PoleInRHS.
Rational saalschutz_rhs(const Rational& a, const Rational& b, const Rational& c, unsigned n);

/// 3F2(-n, A, B; C, 1+A+B-n-C; 1) against saalschutz_rhs.
IdentityReport verify_saalschutz(const Rational& a, const Rational& b, const Rational& c, unsigned n);

/// Terminating Karlsson-Minton value at A = -N:
/// N!/(B+1)_N * prod_j (B_j - B)_{m_j} / (B_j)_{m_j}. Requires N >= sum m_j.
Rational karlsson_minton_terminating_rhs(unsigned big_n, const Rational& b, std::span<const ShiftPair> pairs);

/// (r+2)F(r+1)(-N, B, B_j + m_j; B+1, B_j; 1) against the terminating
/// Karlsson-Minton value.
IdentityReport verify_karlsson_minton(unsigned big_n, const Rational& b, std::span<const ShiftPair> pairs);

/// (r+1)F(r)(-N, B_j + m_j; B_j; 1) = 0 for N > sum m_j.
IdentityReport verify_fields_wimp_vanishing(unsigned big_n, std::span<const ShiftPair> pairs);

/// Balanced 4F3 transformation; F is derived from D + E + F = A + B + C + 1 - n.
IdentityReport verify_whipple(unsigned n, const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const Rational& e);

/// 3phi2(q^-n, A, B; C, q^{1-n}AB/C; q, q) against its product form.
IdentityReport verify_q_saalschutz(const Rational& a, const Rational& b, const Rational& c, const Rational& q,
                                   unsigned n);

/// Balanced 4phi3 transformation; F is derived from DEF = q^{1-n} ABC.
IdentityReport verify_sears(unsigned n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& e, const Rational& q);

}  // namespace hyperfact
