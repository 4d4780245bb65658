#include "signlab/rational.hpp"

#include <cctype>

#include "signlab/error.hpp"

namespace signlab {
namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  boost::multiprecision::mpz_int n(std::string(num[0] == '+' ? num.substr(1) : num));
  boost::multiprecision::mpz_int d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string format_fraction(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return format_fraction(value);
}

}  // namespace signlab
