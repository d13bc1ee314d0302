#include "curvkit/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace curvkit {
namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a rational number: '" + whole + "'");
  }
  return value;
}

}  // namespace

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  const std::string_view s = text;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const std::int64_t den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return {parse_int(s.substr(0, slash), text), den};
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = s.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals in '" + text + "'");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const std::string digits = std::string(s.substr(0, dot)) + std::string(frac);
    if (digits == "" || digits == "-" || digits == "+") {
      throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    return {parse_int(digits[0] == '+' ? std::string_view(digits).substr(1) : digits, text), scale};
  }
  return {parse_int(s, text), 1};
}

}  // namespace curvkit
