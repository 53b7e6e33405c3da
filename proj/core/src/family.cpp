#include "hooklen/family.hpp"

#include <stdexcept>
#include <utility>

namespace hooklen {

FamilyParams FamilyParams::make(Rational s, Rational m) {
  if ((s * m).sign() <= 0)
    throw std::domain_error("FamilyParams: s*m > 0 is required, got s=" + s.str() +
                            ", m=" + m.str());
  if (s.sign() > 0 && !(m.is_integer() && m.sign() > 0))
    throw std::domain_error(
        "FamilyParams: m must be a positive integer when s > 0, got m=" + m.str());
  return FamilyParams{std::move(s), std::move(m)};
}

FamilyParams FamilyParams::parse(std::string_view text) {
  const auto after = [&](std::string_view prefix) -> std::string_view {
    return text.substr(prefix.size());
  };
  if (text == "binary") return make(Rational(1), Rational(2));
  if (text == "ordered") return make(Rational(-1), Rational(-1));
  if (text.starts_with("kary:")) {
    const Rational k = Rational::from_string(after("kary:"));
    return make(Rational(1), k);
  }
  if (text.starts_with("negk:")) {
    const Rational k = Rational::from_string(after("negk:"));
    return make(Rational(-1), -k);
  }
  if (text.starts_with("recip:")) {
    const Rational m = Rational::from_string(after("recip:"));
    if (m.is_zero()) throw std::domain_error("FamilyParams: recip:0 is undefined");
    return make(Rational(1) / m, m);
  }
  const std::size_t comma = text.find(',');
  if (comma == std::string_view::npos)
    throw std::invalid_argument("FamilyParams: unknown preset or missing comma in '" +
                                std::string(text) + "'");
  return make(Rational::from_string(text.substr(0, comma)),
              Rational::from_string(text.substr(comma + 1)));
}

std::string FamilyParams::str() const { return "(" + s.str() + "," + m.str() + ")"; }

}  // namespace hooklen
