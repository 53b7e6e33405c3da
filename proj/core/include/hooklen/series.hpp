#pragma once

#include <string>
#include <vector>

#include "hooklen/family.hpp"
#include "hooklen/poly.hpp"

namespace hooklen {

/// Formal power series in x truncated at x^order, with Poly (in z)
/// coefficients.  Pure-rational series are the degree-0 special case.
/// All arithmetic is exact modulo x^{order+1}.
class Series {
public:
  explicit Series(int order);                  // zero series; order >= 1
  Series(int order, std::vector<Poly> coeffs); // pads with zeros up to order

  static Series one(int order);
  static Series x(int order);

  int order() const { return order_; }
  const Poly& coeff(int k) const;  // 0 <= k <= order

  Series operator-() const;
  Series& operator+=(const Series& o);  // order mismatch: std::invalid_argument
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);

  /// Every coefficient multiplied by c.
  Series scaled(const Poly& c) const;
  /// Multiplication by x (shift up, dropping the top coefficient).
  Series times_x() const;

  friend bool operator==(const Series&, const Series&) = default;

  /// "c0 + c1*x + ... + cN*x^N", nonzero terms only, non-constant Poly
  /// coefficients parenthesized.
  std::string str() const;

private:
  int order_;
  std::vector<Poly> coeffs_;  // exactly order_ + 1 entries
};

/// a^e for rational e via the binomial series sum_k binom(e,k) (a-1)^k,
/// which truncates exactly because a - 1 has positive valuation.
/// Requires constant term 1 (std::invalid_argument otherwise).
Series binomial_pow(const Series& a, const Rational& e);

/// exp(a) = sum_k a^k / k!, exact by truncation.
/// Requires constant term 0 (std::invalid_argument otherwise).
Series exp(const Series& a);

/// The unique series y with y(0) = 0 satisfying y = x (1 + s y)^m modulo
/// x^{order+1}, by fixed-point iteration.  Its coefficients are the weighted
/// tree counts of the family.
Series solve_y(const FamilyParams& fam, int order);

/// The unique series u with u(0) = 1 satisfying u = exp(x u) modulo
/// x^{order+1}; the coefficient of x^n is (n+1)^{n-1} / n!.
Series solve_u(int order);

/// Expands u^z symbolically as exp(z * x * u) — log u = x u exactly, by the
/// defining equation — and checks that the coefficient of x^n equals
/// z (z+n)^{n-1} / n! as a Poly for every n = 1..order.
bool verify_lagrange(int order);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace hooklen
