#pragma once

#include <string>

#include "hooklen/poly.hpp"
#include "hooklen/rational.hpp"

namespace hooklen {

/// Quotient of two Polys, kept in a unique canonical form: fully reduced
/// (gcd of numerator and denominator is constant) with a monic denominator.
/// Structural equality therefore decides mathematical equality.
class RatFunc {
public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
  RatFunc(Poly num, Poly den);  // normalizes; throws std::domain_error on den = 0

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when the denominator reduced to 1.
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);  // throws std::domain_error on o = 0

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  /// Evaluate at a rational point; throws std::domain_error on a pole.
  Rational eval(const Rational& z) const;

  /// "num", or "(num)/(den)" when the denominator is nontrivial.
  std::string str() const;

private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

}  // namespace hooklen
