#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hooklen/family.hpp"
#include "hooklen/ratfunc.hpp"
#include "hooklen/tree.hpp"

namespace hooklen {

// Both sides of every identity are evaluated in exact arithmetic and
// compared structurally on canonical forms; there is no tolerance anywhere.
//
// For a tree T with hook lengths h_v and degrees d_v, and family (s, m):
//
//   p_n = sum_T w(T) prod_v 1 / (h_v * m^{h_v - 1})        = s^{n-1} / n!
//   q_n = sum_T w(T) prod_v (z+h_v)^{h_v-1}
//                           / (h_v * (m z + h_v - 1)^{h_v-2})
//       = s^{n-1} m^n z (z+n)^{n-1} / n!
//
// Negative exponents in the q factor are resolved by an exponent split:
// the numerator carries (m z + h - 1)^{max(0, 2-h)} and the denominator
// (m z + h - 1)^{max(0, h-2)}, so the h = 1 factor is just m*z.

/// One tree's contribution to p_n.
Rational p_term(const OrderedTree& t, const FamilyParams& fam);

/// Left side of the scalar identity, summed over all trees with n vertices.
Rational p_direct(int n, const FamilyParams& fam);

/// Right side s^{n-1} / n!.
Rational p_closed(int n, const FamilyParams& fam);

/// p_n evaluated through the composition recursion
///   p_n = 1/(n m^{n-1}) * sum_{d>=1} binom(m,d) s^d
///         * sum over compositions (j_1..j_d) of n-1 of p_{j_1}...p_{j_d},
/// with the inner sum computed as a truncated power of the series sum p_j x^j.
Rational p_recursive(int n, const FamilyParams& fam);

/// One tree's contribution to q_n.
RatFunc q_term(const OrderedTree& t, const FamilyParams& fam);

/// Left side of the polynomial identity.  The per-tree poles cancel in the
/// sum, so the canonical result has unit denominator.
RatFunc q_direct(int n, const FamilyParams& fam);

/// Right side s^{n-1} m^n z (z+n)^{n-1} / n!.
RatFunc q_closed(int n, const FamilyParams& fam);

/// q_n evaluated through the analogous recursion with prefactor
/// (z+n)^{n-1} / (n (m z + n - 1)^{n-2}).
RatFunc q_recursive(int n, const FamilyParams& fam);

/// sum_T prod_v 1/d_v! over ordered trees with n vertices; equals n^{n-1}/n!.
Rational limit_identity_lhs(int n);

enum class IdentityId { main_p, main_q, rec_p, rec_q, han_p, han_q, limit };

std::string_view to_string(IdentityId id);
IdentityId identity_from_string(std::string_view name);  // throws std::invalid_argument

struct IdentityReport {
  IdentityId id;
  std::optional<FamilyParams> family;  // absent for the family-free limit identity
  int n = 0;
  RatFunc lhs;
  RatFunc rhs;
  bool holds = false;
};

/// Evaluates both sides of the named identity for n = 1..n_max.
///
///   main_p  p_direct vs p_closed          (family required)
///   main_q  q_direct vs q_closed          (family required)
///   rec_p   p_recursive vs p_direct       (family required)
///   rec_q   q_recursive vs q_direct       (family required)
///   han_p   p_direct vs 1/n!              (family forced to (1,2))
///   han_q   q_direct vs 2^n z(z+n)^{n-1}/n!  (family forced to (1,2))
///   limit   sum prod 1/d_v! vs n^{n-1}/n! (family ignored)
std::vector<IdentityReport> verify(IdentityId id, const std::optional<FamilyParams>& fam,
                                   int n_max);

/// Machine-readable line "id,s,m,n,holds,lhs,rhs"; s and m are empty for
/// the limit identity.
std::string csv_line(const IdentityReport& r);

/// Plain-text table with one row per report and a PASS/FAIL verdict column.
std::string report_table(const std::vector<IdentityReport>& reports);

}  // namespace hooklen
