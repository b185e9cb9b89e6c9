#include "singularhorn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace singularhorn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("sign without digits in rational literal");

  auto slash = s.find('/');
  auto dot = s.find('.');
  Rational value;
  if (slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer{std::string(num)}, d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer numerator = whole.empty() ? Integer{0} : Integer{std::string(whole)};
    numerator *= scale;
    if (!frac.empty()) numerator += Integer{std::string(frac)};
    value = Rational(numerator, scale);
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed integer '" + std::string(text) + "'");
    value = Rational(Integer{std::string(s)});
  }
  if (negative) value = -value;
  return value;
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::vector<Rational> parse_rational_vector(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_rational(t));
  return out;
}

}  // namespace singularhorn
