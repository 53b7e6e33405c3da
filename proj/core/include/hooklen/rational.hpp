#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hooklen {

/// Exact arbitrary-precision rational scalar, backed by GMP.
///
/// Values are always canonical: denominator > 0, gcd(|num|, den) = 1, and
/// zero is stored as 0/1.  Immutable in spirit: every operation returns a
/// new value, so Rationals can be shared freely across threads.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);  // throws std::domain_error if d == 0
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p" or "p/q" with an optional leading sign.
  /// Throws std::invalid_argument on malformed input, std::domain_error on q = 0.
  static Rational from_string(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on o == 0

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// "p/q", or just "p" for integers.
  std::string str() const;

private:
  mpq_class v_;
};

/// base^e for a nonnegative integer exponent; pow(x, 0) = 1.
Rational pow(const Rational& base, unsigned e);

/// n! as a Rational (exact).
Rational factorial(unsigned n);

/// Generalized binomial coefficient binom(m, d) = m(m-1)...(m-d+1) / d!
/// for rational (possibly negative or non-integer) m; binom(m, 0) = 1.
Rational binom(const Rational& m, unsigned d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hooklen
