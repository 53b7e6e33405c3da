#include "hooklen/series.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace hooklen {

Series::Series(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("Series: order must be >= 1");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series::Series(int order, std::vector<Poly> coeffs) : Series(order) {
  if (coeffs.size() > coeffs_.size())
    throw std::invalid_argument("Series: more coefficients than order allows");
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

Series Series::one(int order) { return Series(order, {Poly(1)}); }

Series Series::x(int order) { return Series(order, {Poly(), Poly(1)}); }

const Poly& Series::coeff(int k) const {
  return coeffs_.at(static_cast<std::size_t>(k));
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {
void check_orders(const Series& a, const Series& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("Series: order mismatch (" + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()) + ")");
}
}  // namespace

Series& Series::operator+=(const Series& o) {
  check_orders(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_orders(*this, o);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  check_orders(a, b);
  Series out(a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] +=
          a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return out;
}

Series Series::scaled(const Poly& c) const {
  Series r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series Series::times_x() const {
  Series r(order_);
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) r.coeffs_[k] = coeffs_[k - 1];
  return r;
}

Series binomial_pow(const Series& a, const Rational& e) {
  if (!a.coeff(0).is_one())
    throw std::invalid_argument("binomial_pow: constant term must be 1");
  const int N = a.order();
  const Series t = a - Series::one(N);  // positive valuation
  Series result = Series::one(N);
  Series term = Series::one(N);
  for (int k = 1; k <= N; ++k) {
    term = term * t;
    result += term.scaled(Poly(binom(e, static_cast<unsigned>(k))));
  }
  return result;
}

Series exp(const Series& a) {
  if (!a.coeff(0).is_zero())
    throw std::invalid_argument("exp: constant term must be 0");
  const int N = a.order();
  Series result = Series::one(N);
  Series term = Series::one(N);
  for (int k = 1; k <= N; ++k) {
    term = term * a;
    result += term.scaled(Poly(Rational(1) / factorial(static_cast<unsigned>(k))));
  }
  return result;
}

Series solve_y(const FamilyParams& fam, int order) {
  Series y(order);
  for (int it = 0; it < order; ++it) {
    const Series base = Series::one(order) + y.scaled(Poly(fam.s));
    y = binomial_pow(base, fam.m).times_x();
  }
  return y;
}

Series solve_u(int order) {
  Series u = Series::one(order);
  for (int it = 0; it < order; ++it) u = exp(u.times_x());
  return u;
}

bool verify_lagrange(int order) {
  const Series u = solve_u(order);
  const Series uz = exp(u.times_x().scaled(Poly::z()));
  if (!(uz.coeff(0) == Poly(1))) return false;
  for (int n = 1; n <= order; ++n) {
    Poly expect = Poly::z() * pow(Poly::linear(Rational(1), Rational(n)),
                                  static_cast<unsigned>(n - 1));
    expect *= Rational(1) / factorial(static_cast<unsigned>(n));
    if (!(uz.coeff(n) == expect)) return false;
  }
  return true;
}

std::string Series::str() const {
  std::string out;
  for (int k = 0; k <= order_; ++k) {
    const Poly& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string coef;
    bool neg = false;
    if (c.degree() == 0) {
      const Rational& r = c.coeff(0);
      neg = r.sign() < 0;
      const Rational mag = neg ? -r : r;
      if (k == 0 || !mag.is_one()) coef = mag.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += coef;
    if (k >= 1) {
      if (!coef.empty()) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

}  // namespace hooklen
