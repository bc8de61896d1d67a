#include "gorder/rational.hpp"

#include "gorder/errors.hpp"

namespace gorder {

Rational rational_from_parts(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw validation_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rational(n);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return rational_from_parts(num, den);
  } catch (const std::invalid_argument&) {
    throw parse_error("not a rational literal: '" + text + "'");
  }
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string point_to_string(const Point& p) {
  return "(" + rational_to_string(p.x) + ", " + rational_to_string(p.y) + ")";
}

}  // namespace gorder
