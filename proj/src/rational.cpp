#include "polydag/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace polydag {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  std::string text(s);
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den)) {
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    }
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(parse_integer(num), d);
    r.canonicalize();
    return r;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    bool negative = !digits.empty() && digits[0] == '-';
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.erase(0, 1);
    if (digits.empty()) digits = "0";
    if (frac.empty() || !is_integer_literal(digits) || !is_integer_literal(frac) || frac[0] == '-' ||
        frac[0] == '+') {
      throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class num = mpz_class(digits, 10) * scale + mpz_class(frac, 10);
    Rational r(negative ? mpz_class(-num) : num, scale);
    r.canonicalize();
    return r;
  }

  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot convert non-finite double to rational");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

}  // namespace polydag
