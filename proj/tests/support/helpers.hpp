#pragma once

#include <string>
#include <vector>

#include "intertwine/rootsystem.hpp"
#include "intertwine/parse.hpp"
#include "intertwine/weyl.hpp"

namespace testing {

inline intertwine::RootSystem make_system(const std::string& name) {
  return intertwine::RootSystem(intertwine::parse_root_system_spec(name));
}

inline intertwine::Weight W(const intertwine::RootSystem& rs, const std::string& text) {
  return intertwine::parse_weight(text, rs.rank());
}

inline intertwine::WeylElem elem(const intertwine::RootSystem& rs, const std::string& word) {
  return intertwine::from_word(rs, intertwine::parse_word(word, rs.rank()));
}

inline intertwine::Root root(std::vector<int> coords) { return intertwine::Root{std::move(coords)}; }

}  // namespace testing
