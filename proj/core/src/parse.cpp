#include "intertwine/parse.hpp"

#include <cctype>

#include "intertwine/errors.hpp"

namespace intertwine {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

RootSystemSpec parse_root_system_spec(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty root system type");
  RootSystemSpec spec;
  std::size_t i = 0;
  while (i < s.size()) {
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    CartanType type;
    switch (letter) {
      case 'A': type = CartanType::A; break;
      case 'B': type = CartanType::B; break;
      case 'C': type = CartanType::C; break;
      case 'D': type = CartanType::D; break;
      case 'E': type = CartanType::E; break;
      case 'F': type = CartanType::F; break;
      case 'G': type = CartanType::G; break;
      default:
        throw ParseError("expected a Cartan type letter A-G in '" + std::string(text) + "'");
    }
    ++i;
    const std::size_t start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == start || i - start > 3) throw ParseError("missing or oversized rank in '" + std::string(text) + "'");
    spec.components.push_back({type, std::stoi(std::string(s.substr(start, i - start)))});
    if (i == s.size()) break;
    if (s[i] != 'x' && s[i] != 'X' && s[i] != '+') {
      throw ParseError("unexpected '" + std::string(1, s[i]) + "' in '" + std::string(text) + "'");
    }
    if (++i == s.size()) throw ParseError("dangling separator in '" + std::string(text) + "'");
  }
  validate(spec);
  return spec;
}

Weight parse_weight(std::string_view text, int rank) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in weight '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<Rational> coords;
  if (!s.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = s.find(',', pos);
      coords.push_back(parse_rational(s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (static_cast<int>(coords.size()) != rank) {
    throw ParseError("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                     " coordinates, expected " + std::to_string(rank));
  }
  return Weight(std::move(coords));
}

Word parse_word(std::string_view text, int rank) {
  const std::string_view s = trim(text);
  if (s == "e") return {};
  if (s.empty()) throw ParseError("empty word; write 'e' for the identity");

  auto check = [&](int k) {
    if (k < 1 || k > rank) {
      throw ParseError("reflection index " + std::to_string(k) + " out of range 1.." + std::to_string(rank) +
                       " in '" + std::string(text) + "'");
    }
    return k;
  };

  Word word;
  const bool separated = s.find_first_of(" s,") != std::string_view::npos;
  if (!separated) {
    // compact "121": one digit per letter
    if (rank > 9) throw ParseError("compact words need rank <= 9; separate letters with spaces");
    for (char c : s) {
      if (!is_digit(c)) throw ParseError("unexpected '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
      word.push_back(check(c - '0'));
    }
    return word;
  }
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*') {
      ++i;
      continue;
    }
    if (c == 's') ++i;
    const std::size_t start = i;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == start || i - start > 4) throw ParseError("malformed word '" + std::string(text) + "'");
    word.push_back(check(std::stoi(std::string(s.substr(start, i - start)))));
  }
  return word;
}

}  // namespace intertwine
