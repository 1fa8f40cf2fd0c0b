#include "opset/scalar.hpp"

#include <cctype>

namespace opset {

std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

Rational parse_rational(const std::string& text) {
  // Validate strictly before handing to GMP: [-]digits[/digits]
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (text[i] == '-') ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw ParseError("malformed rational literal '" + text + "'");
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("malformed rational literal '" + text + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size())
      throw ParseError("malformed rational literal '" + text + "'");
  }
  Rational r;
  if (r.set_str(text, 10) != 0) throw ParseError("malformed rational literal '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

int compare(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re, b.re);
  if (c != 0) return c;
  return cmp(a.im, b.im);
}

std::string scalar_to_string(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  return rational_to_string(s.re) + (s.im > 0 ? "+" : "") + rational_to_string(s.im) + "i";
}

}  // namespace opset
