#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hooklen/ratfunc.hpp"

using hooklen::Poly;
using hooklen::RatFunc;
using hooklen::Rational;

namespace {

// den nonzero and monic, gcd(num, den) constant.
void check_canonical(const RatFunc& f) {
  REQUIRE_FALSE(f.den().is_zero());
  CHECK(f.den().leading() == Rational(1));
  if (!f.num().is_zero()) CHECK(gcd(f.num(), f.den()).degree() == 0);
  if (f.is_zero()) CHECK(f.den().is_one());
}

Poly random_poly(std::mt19937& rng, int max_deg, bool nonzero = false) {
  std::uniform_int_distribution<int> deg(nonzero ? 0 : -1, max_deg);
  std::uniform_int_distribution<long> c(-5, 5);
  const int dg = deg(rng);
  std::vector<Rational> coeffs;
  for (int k = 0; k < dg; ++k) coeffs.emplace_back(c(rng));
  coeffs.emplace_back(dg >= 0 ? 1 : 0);  // force a nonzero leading term
  return Poly(std::move(coeffs));
}

const Poly z = Poly::z();

}  // namespace

TEST_SUITE("ratfunc") {

TEST_CASE("construction normalizes") {
  // (z^2 - 1)/(z - 1) reduces to z + 1
  const RatFunc f(z * z - Poly(1), z - Poly(1));
  CHECK(f == RatFunc(z + Poly(1)));
  CHECK(f.is_polynomial());

  // denominator made monic: (z+1)/(2z+4) -> (1/2 z + 1/2)/(z + 2)
  const RatFunc g(z + Poly(1), Poly(2) * z + Poly(4));
  CHECK(g.den() == z + Poly(2));
  CHECK(g.num() == Poly(Rational(1, 2)) * (z + Poly(1)));

  CHECK_THROWS_AS(RatFunc(z, Poly()), std::domain_error);
}

TEST_CASE("poles cancel in sums") {
  const RatFunc a(Poly(1), z + Poly(1));
  const RatFunc b(z, z + Poly(1));
  CHECK(a + b == RatFunc(Rational(1)));
}

TEST_CASE("field axioms on random instances") {
  std::mt19937 rng(101);
  for (int i = 0; i < 80; ++i) {
    const RatFunc a(random_poly(rng, 4), random_poly(rng, 3, true));
    const RatFunc b(random_poly(rng, 4), random_poly(rng, 3, true));
    check_canonical(a);
    check_canonical(a + b);
    check_canonical(a - b);
    check_canonical(a * b);
    CHECK(a * RatFunc(Rational(1)) == a);
    CHECK(a + (-a) == RatFunc());
    CHECK((a + b) - b == a);
    if (!b.is_zero()) {
      check_canonical(a / b);
      CHECK((a / b) * b == a);
    }
  }
  CHECK_THROWS_AS(RatFunc(z) / RatFunc(), std::domain_error);
}

TEST_CASE("structural equality is mathematical equality") {
  std::mt19937 rng(211);
  int equal_seen = 0;
  for (int i = 0; i < 120; ++i) {
    const Poly a = random_poly(rng, 3);
    const Poly b = random_poly(rng, 2, true);
    Poly c = random_poly(rng, 3);
    Poly d = random_poly(rng, 2, true);
    if (i % 3 == 0) {
      // build a mathematically equal pair by scaling with a random poly
      const Poly e = random_poly(rng, 2, true);
      c = a * e;
      d = b * e;
    }
    const RatFunc f(a, b);
    const RatFunc g(c, d);
    const bool cross = (a * d == c * b);
    CHECK((f == g) == cross);
    if (f == g) ++equal_seen;
  }
  CHECK(equal_seen >= 40);  // the constructed-equal branch actually ran
}

TEST_CASE("evaluation") {
  const RatFunc f(z * z - Poly(1), z - Poly(1));  // z + 1 after reduction
  CHECK(f.eval(Rational(1)) == Rational(2));      // the removable pole is gone
  const RatFunc g(Poly(1), z - Poly(2));
  CHECK(g.eval(Rational(3)) == Rational(1));
  CHECK_THROWS_AS(g.eval(Rational(2)), std::domain_error);
}

TEST_CASE("text rendering") {
  CHECK(RatFunc(Rational(1, 24)).str() == "1/24");
  const RatFunc g(Poly(1), z + Poly(2));
  CHECK(g.str() == "(1)/(z + 2)");
}

}  // TEST_SUITE
