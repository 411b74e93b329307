#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace intertwine {

/// Exact scalar used for every weight coordinate and pairing.
using Rational = boost::rational<std::int64_t>;

inline bool is_integer(const Rational& q) { return q.denominator() == 1; }
inline bool is_negative_integer(const Rational& q) { return is_integer(q) && q.numerator() < 0; }
inline bool is_positive_integer(const Rational& q) { return is_integer(q) && q.numerator() > 0; }

/// "3", "-1/2". Denominator 1 is omitted.
std::string to_string(const Rational& q);

/// Accepts "3", "-7", "1/2", "-3/4" with optional surrounding spaces.
Rational parse_rational(std::string_view text);

std::size_t hash_value(const Rational& q) noexcept;

}  // namespace intertwine
