#include "hooklen/ratfunc.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace hooklen {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).quot;
    den_ = divmod(den_, g).quot;
  }
  const Rational scale = Rational(1) / den_.leading();
  num_ *= scale;
  den_ *= scale;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational RatFunc::eval(const Rational& z) const {
  const Rational d = den_.eval(z);
  if (d.is_zero()) throw std::domain_error("RatFunc: evaluation at a pole");
  return num_.eval(z) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

}  // namespace hooklen
