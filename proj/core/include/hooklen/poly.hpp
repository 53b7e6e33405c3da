#pragma once

#include <string>
#include <vector>

#include "hooklen/rational.hpp"

namespace hooklen {

/// Dense univariate polynomial in z over Rational.
///
/// The coefficient vector is trimmed: the zero polynomial is the empty
/// vector, anything else ends in a nonzero leading coefficient, so equal
/// polynomials compare equal structurally.
class Poly {
public:
  /// degree() of the zero polynomial.
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& c);
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);  // trims trailing zeros

  /// The indeterminate z.
  static Poly z();
  /// a1*z + a0.
  static Poly linear(const Rational& a1, const Rational& a0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const Rational& coeff(int k) const;  // 0 outside the stored range
  const Rational& leading() const;     // pre: not zero
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Leading coefficient scaled to 1.  Pre: not zero.
  Poly monic() const;

  Rational eval(const Rational& z) const;

  /// Descending powers, explicit signs, rationals as p/q:
  /// "1/24*z^3 + 1/2*z^2", "-z^2 - 8/3*z".  Zero renders as "0".
  std::string str(std::string_view var = "z") const;

private:
  void trim();
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies z^k
};

/// p^e with p^0 = 1, including for the zero polynomial.
Poly pow(const Poly& p, unsigned e);

struct PolyDivMod {
  Poly quot;
  Poly rem;
};

/// Exact euclidean division over the rationals.  Throws std::domain_error
/// if the divisor is zero.
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor by the euclidean remainder sequence.
/// Throws std::domain_error if both arguments are zero.
Poly gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hooklen
