#include "constellation/rational.hpp"

#include <cctype>

#include "constellation/error.hpp"

namespace constellation {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den))) {
    throw Error("not a rational literal: \"" + std::string(text) + "\"");
  }
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  Integer p(strip_plus(num));
  Integer q = slash == std::string_view::npos ? Integer(1) : Integer(strip_plus(den));
  if (q == 0) throw Error("zero denominator in \"" + std::string(text) + "\"");
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error("dot product of vectors with different dimensions");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace constellation
