#include "ahl/ring/bigint.hpp"

#include "ahl/error.hpp"

namespace ahl {

std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error("invalid integer: '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw Error("invalid integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

}  // namespace ahl
