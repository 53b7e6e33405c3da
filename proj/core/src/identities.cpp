#include "hooklen/identities.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hooklen {

Rational p_term(const OrderedTree& t, const FamilyParams& fam) {
  const VertexStats stats = hook_lengths(t);
  Rational r = weight(t, fam);
  for (int h : stats.hook)
    r /= Rational(h) * pow(fam.m, static_cast<unsigned>(h - 1));
  return r;
}

Rational p_direct(int n, const FamilyParams& fam) {
  Rational total;
  for (const OrderedTree& t : enumerate_ordered(n)) total += p_term(t, fam);
  return total;
}

Rational p_closed(int n, const FamilyParams& fam) {
  if (n < 1) throw std::domain_error("p_closed: n must be >= 1");
  return pow(fam.s, static_cast<unsigned>(n - 1)) / factorial(static_cast<unsigned>(n));
}

Rational p_recursive(int n, const FamilyParams& fam) {
  if (n < 1) throw std::domain_error("p_recursive: n must be >= 1");
  // p[j] for j = 1..n, built bottom-up; index 0 stays zero so the vectors
  // double as truncated power series in x.
  std::vector<Rational> p(static_cast<std::size_t>(n) + 1);
  p[1] = Rational(1);
  for (int nn = 2; nn <= n; ++nn) {
    const std::size_t top = static_cast<std::size_t>(nn - 1);
    std::vector<Rational> cur(p.begin(), p.begin() + nn);  // P^1 truncated
    Rational total;
    Rational sd = fam.s;
    for (int d = 1; d <= nn - 1; ++d) {
      total += binom(fam.m, static_cast<unsigned>(d)) * sd * cur[top];
      sd *= fam.s;
      if (d < nn - 1) {
        // cur <- cur * P, truncated at x^{nn-1}
        std::vector<Rational> next(static_cast<std::size_t>(nn));
        for (std::size_t i = 1; i <= top; ++i)
          for (std::size_t j = 1; i + j <= top; ++j) next[i + j] += cur[i] * p[j];
        cur = std::move(next);
      }
    }
    p[static_cast<std::size_t>(nn)] =
        total / (Rational(nn) * pow(fam.m, static_cast<unsigned>(nn - 1)));
  }
  return p[static_cast<std::size_t>(n)];
}

namespace {

// (z + h)^{h-1} * (m z + h - 1)^{max(0, 2-h)}  over
// h * (m z + h - 1)^{max(0, h-2)}
RatFunc hook_factor(int h, const Rational& m) {
  const Poly zh = Poly::linear(Rational(1), Rational(h));
  const Poly mzh = Poly::linear(m, Rational(h - 1));
  Poly num = pow(zh, static_cast<unsigned>(h - 1));
  if (h < 2) num *= pow(mzh, static_cast<unsigned>(2 - h));
  Poly den{Rational(h)};
  if (h > 2) den *= pow(mzh, static_cast<unsigned>(h - 2));
  return RatFunc(std::move(num), std::move(den));
}

}  // namespace

RatFunc q_term(const OrderedTree& t, const FamilyParams& fam) {
  const VertexStats stats = hook_lengths(t);
  RatFunc r{weight(t, fam)};
  for (int h : stats.hook) r *= hook_factor(h, fam.m);
  return r;
}

RatFunc q_direct(int n, const FamilyParams& fam) {
  RatFunc total;
  for (const OrderedTree& t : enumerate_ordered(n)) total += q_term(t, fam);
  return total;
}

RatFunc q_closed(int n, const FamilyParams& fam) {
  if (n < 1) throw std::domain_error("q_closed: n must be >= 1");
  const Rational scale = pow(fam.s, static_cast<unsigned>(n - 1)) *
                         pow(fam.m, static_cast<unsigned>(n)) /
                         factorial(static_cast<unsigned>(n));
  Poly body = Poly::z() * pow(Poly::linear(Rational(1), Rational(n)),
                              static_cast<unsigned>(n - 1));
  body *= scale;
  return RatFunc(std::move(body));
}

RatFunc q_recursive(int n, const FamilyParams& fam) {
  if (n < 1) throw std::domain_error("q_recursive: n must be >= 1");
  std::vector<RatFunc> q(static_cast<std::size_t>(n) + 1);
  q[1] = RatFunc(Poly::linear(fam.m, Rational(0)));  // q_1 = m z
  for (int nn = 2; nn <= n; ++nn) {
    const std::size_t top = static_cast<std::size_t>(nn - 1);
    std::vector<RatFunc> cur(q.begin(), q.begin() + nn);
    RatFunc total;
    Rational sd = fam.s;
    for (int d = 1; d <= nn - 1; ++d) {
      total += cur[top] * RatFunc(binom(fam.m, static_cast<unsigned>(d)) * sd);
      sd *= fam.s;
      if (d < nn - 1) {
        std::vector<RatFunc> next(static_cast<std::size_t>(nn));
        for (std::size_t i = 1; i <= top; ++i)
          for (std::size_t j = 1; i + j <= top; ++j) next[i + j] += cur[i] * q[j];
        cur = std::move(next);
      }
    }
    // prefactor (z+nn)^{nn-1} / (nn (m z + nn - 1)^{nn-2}); nn >= 2 keeps
    // both exponents nonnegative
    Poly num = pow(Poly::linear(Rational(1), Rational(nn)), static_cast<unsigned>(nn - 1));
    Poly den = Poly(Rational(nn)) * pow(Poly::linear(fam.m, Rational(nn - 1)),
                                        static_cast<unsigned>(nn - 2));
    q[static_cast<std::size_t>(nn)] = RatFunc(std::move(num), std::move(den)) * total;
  }
  return q[static_cast<std::size_t>(n)];
}

Rational limit_identity_lhs(int n) {
  Rational total;
  for (const OrderedTree& t : enumerate_ordered(n)) {
    Rational term(1);
    for (int d : hook_lengths(t).degree) term /= factorial(static_cast<unsigned>(d));
    total += term;
  }
  return total;
}

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::main_p: return "main_p";
    case IdentityId::main_q: return "main_q";
    case IdentityId::rec_p: return "rec_p";
    case IdentityId::rec_q: return "rec_q";
    case IdentityId::han_p: return "han_p";
    case IdentityId::han_q: return "han_q";
    case IdentityId::limit: return "limit";
  }
  throw std::invalid_argument("to_string: bad IdentityId");
}

IdentityId identity_from_string(std::string_view name) {
  for (IdentityId id : {IdentityId::main_p, IdentityId::main_q, IdentityId::rec_p,
                        IdentityId::rec_q, IdentityId::han_p, IdentityId::han_q,
                        IdentityId::limit}) {
    if (name == to_string(id)) return id;
  }
  throw std::invalid_argument("unknown identity '" + std::string(name) + "'");
}

std::vector<IdentityReport> verify(IdentityId id, const std::optional<FamilyParams>& fam,
                                   int n_max) {
  if (n_max < 1) throw std::domain_error("verify: n_max must be >= 1");
  const bool needs_family = id == IdentityId::main_p || id == IdentityId::main_q ||
                            id == IdentityId::rec_p || id == IdentityId::rec_q;
  if (needs_family && !fam.has_value())
    throw std::invalid_argument("verify: identity '" + std::string(to_string(id)) +
                                "' requires a family");

  const FamilyParams han = FamilyParams::make(Rational(1), Rational(2));
  std::vector<IdentityReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    IdentityReport r;
    r.id = id;
    r.n = n;
    switch (id) {
      case IdentityId::main_p:
        r.family = *fam;
        r.lhs = RatFunc(p_direct(n, *fam));
        r.rhs = RatFunc(p_closed(n, *fam));
        break;
      case IdentityId::main_q:
        r.family = *fam;
        r.lhs = q_direct(n, *fam);
        r.rhs = q_closed(n, *fam);
        break;
      case IdentityId::rec_p:
        r.family = *fam;
        r.lhs = RatFunc(p_recursive(n, *fam));
        r.rhs = RatFunc(p_direct(n, *fam));
        break;
      case IdentityId::rec_q:
        r.family = *fam;
        r.lhs = q_recursive(n, *fam);
        r.rhs = q_direct(n, *fam);
        break;
      case IdentityId::han_p:
        r.family = han;
        r.lhs = RatFunc(p_direct(n, han));
        r.rhs = RatFunc(Rational(1) / factorial(static_cast<unsigned>(n)));
        break;
      case IdentityId::han_q: {
        r.family = han;
        r.lhs = q_direct(n, han);
        Poly body = Poly::z() * pow(Poly::linear(Rational(1), Rational(n)),
                                    static_cast<unsigned>(n - 1));
        body *= pow(Rational(2), static_cast<unsigned>(n)) /
                factorial(static_cast<unsigned>(n));
        r.rhs = RatFunc(std::move(body));
        break;
      }
      case IdentityId::limit:
        r.lhs = RatFunc(limit_identity_lhs(n));
        r.rhs = RatFunc(pow(Rational(n), static_cast<unsigned>(n - 1)) /
                        factorial(static_cast<unsigned>(n)));
        break;
    }
    r.holds = (r.lhs == r.rhs);
    reports.push_back(std::move(r));
  }
  return reports;
}

std::string csv_line(const IdentityReport& r) {
  std::string s, m;
  if (r.family.has_value()) {
    s = r.family->s.str();
    m = r.family->m.str();
  }
  return std::string(to_string(r.id)) + "," + s + "," + m + "," + std::to_string(r.n) +
         "," + (r.holds ? "true" : "false") + "," + r.lhs.str() + "," + r.rhs.str();
}

std::string report_table(const std::vector<IdentityReport>& reports) {
  std::ostringstream os;
  os << "identity  family       n  lhs = rhs  verdict\n";
  for (const auto& r : reports) {
    std::string fam = r.family.has_value() ? r.family->str() : "-";
    os << to_string(r.id);
    for (std::size_t i = to_string(r.id).size(); i < 10; ++i) os << ' ';
    os << fam;
    for (std::size_t i = fam.size(); i < 11; ++i) os << ' ';
    os << ' ' << r.n << "  " << r.lhs.str() << " = " << r.rhs.str() << "  "
       << (r.holds ? "PASS" : "FAIL") << "\n";
  }
  return os.str();
}

}  // namespace hooklen
