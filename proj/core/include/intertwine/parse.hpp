#pragma once

#include <string>
#include <string_view>

#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

// Text forms used by the CLI. Every parser accepts its own canonical output.

namespace intertwine {

/// "A2", "B3", "A1xA1" (also "A1+A1"). ParseError on syntax, ValidationError
/// on an inadmissible rank.
RootSystemSpec parse_root_system_spec(std::string_view text);

/// "(a,b,...)" in fundamental-weight coordinates; parentheses optional.
/// ParseError when the coordinate count differs from `rank`.
Weight parse_weight(std::string_view text, int rank);

/// "e", "s1 s2 s1", "s1s2s1", "1 2 1" or compact "121" (rank <= 9 only).
/// ParseError for indices outside 1..rank.
Word parse_word(std::string_view text, int rank);

}  // namespace intertwine
