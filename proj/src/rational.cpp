#include "pyramid/rational.hpp"

#include <cctype>

namespace pyramid {

std::string format_rational(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool is_integer_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || !std::isdigit(static_cast<unsigned char>(den[0]))) {
    throw InputError("malformed rational '" + text + "'");
  }
  boost::multiprecision::mpz_int n(num[0] == '+' ? num.substr(1) : num);
  boost::multiprecision::mpz_int d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  return Rational(n, d);
}

}  // namespace pyramid
