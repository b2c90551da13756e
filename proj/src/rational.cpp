#include "coarsekit/rational.hpp"

#include <stdexcept>

namespace coarsekit {

namespace {

BigInt parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed rational '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed rational '" + s + "'");
  }
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

std::string to_string(const Rational& q) {
  const BigInt n = numerator(q), d = denominator(q);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace coarsekit
