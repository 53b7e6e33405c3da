#include "hooklen/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace hooklen {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  const auto digits = [&](std::string& out) {
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') out += '-';  // mpz_set_str does not take '+'
      ++i;
    }
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) out += text[i++];
    if (i == start) throw bad();
  };
  std::string num, den;
  digits(num);
  if (i < text.size() && text[i] == '/') {
    ++i;
    digits(den);
  }
  if (i != text.size()) throw bad();

  mpq_class v;
  v.get_num() = mpz_class(num);
  v.get_den() = den.empty() ? mpz_class(1) : mpz_class(den);
  if (sgn(v.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = v;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
  return s;
}

Rational pow(const Rational& base, unsigned e) {
  Rational acc(1);
  Rational sq = base;
  while (e > 0) {
    if (e & 1u) acc *= sq;
    e >>= 1u;
    if (e > 0) sq *= sq;
  }
  return acc;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binom(const Rational& m, unsigned d) {
  Rational r(1);
  for (unsigned i = 0; i < d; ++i) r *= m - Rational(static_cast<long>(i));
  return r / factorial(d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hooklen
