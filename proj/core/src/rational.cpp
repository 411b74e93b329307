#include "intertwine/rational.hpp"

#include <cctype>
#include <charconv>
#include <functional>

#include "intertwine/errors.hpp"

namespace intertwine {

std::string to_string(const Rational& q) {
  std::string out = std::to_string(q.numerator());
  if (q.denominator() != 1) {
    out += '/';
    out += std::to_string(q.denominator());
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const std::int64_t num = parse_int(s.substr(0, slash), text);
  const std::int64_t den = parse_int(s.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::size_t hash_value(const Rational& q) noexcept {
  const std::size_t a = std::hash<std::int64_t>{}(q.numerator());
  const std::size_t b = std::hash<std::int64_t>{}(q.denominator());
  return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

}  // namespace intertwine
