#pragma once

#include <string>
#include <string_view>

#include "hooklen/rational.hpp"

namespace hooklen {

/// Parameters (s, m) of a binomial family of weighted ordered trees, where
/// each tree T carries the weight  w(T) = prod_v binom(m, d_v) * s^{d_v}.
///
/// Valid parameters satisfy s*m > 0, and m must be a positive integer
/// whenever s > 0.
struct FamilyParams {
  Rational s;
  Rational m;

  /// Validates the constraints; throws std::domain_error naming the one
  /// that is violated.
  static FamilyParams make(Rational s, Rational m);

  /// Accepts "s,m" with rational literals ("1/3,3", "-1,-2") or a preset:
  /// binary, ordered, kary:K, negk:K, recip:M.
  static FamilyParams parse(std::string_view text);

  std::string str() const;  // "(s,m)"

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

}  // namespace hooklen
