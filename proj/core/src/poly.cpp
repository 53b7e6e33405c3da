#include "hooklen/poly.hpp"

#include <cassert>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hooklen {

namespace {
const Rational kZero;
}

Poly::Poly(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::z() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::linear(const Rational& a1, const Rational& a0) {
  return Poly(std::vector<Rational>{a0, a1});
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly::leading() const {
  assert(!coeffs_.empty());
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::monic() const {
  assert(!is_zero());
  return *this * (Rational(1) / leading());
}

Rational Poly::eval(const Rational& z) const {
  Rational acc;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

Poly pow(const Poly& p, unsigned e) {
  Poly acc(1);
  Poly sq = p;
  while (e > 0) {
    if (e & 1u) acc *= sq;
    e >>= 1u;
    if (e > 0) sq *= sq;
  }
  return acc;
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly: division by the zero polynomial");
  Poly rem = a;
  std::vector<Rational> quot;
  const int db = b.degree();
  if (rem.degree() >= db) quot.resize(static_cast<std::size_t>(rem.degree() - db) + 1);
  while (!rem.is_zero() && rem.degree() >= db) {
    const int k = rem.degree() - db;
    const Rational c = rem.leading() / b.leading();
    quot[static_cast<std::size_t>(k)] = c;
    // rem -= c * z^k * b
    std::vector<Rational> shifted(static_cast<std::size_t>(k), Rational(0));
    for (const auto& bc : b.coeffs()) shifted.push_back(bc * c);
    rem -= Poly(std::move(shifted));
  }
  return {Poly(std::move(quot)), rem};
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("Poly: gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).rem;
    x = std::move(y);
    // keep remainders monic to tame coefficient growth
    y = r.is_zero() ? std::move(r) : r.monic();
  }
  return x.monic();
}

std::string Poly::str(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = neg ? -c : c;
    if (k == 0) {
      out += mag.str();
    } else {
      if (!mag.is_one()) out += mag.str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace hooklen
