#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "intertwine/errors.hpp"
#include "intertwine/weyl.hpp"
#include "support/helpers.hpp"

using namespace intertwine;
using testing::elem;
using testing::make_system;
using testing::W;

namespace {

// Subword property on a fixed reduced word of v, with no reference to the library's order.
bool subword_leq(const RootSystem& rs, const WeylElem& u, const Word& v_word) {
  const std::size_t l = v_word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
    Word sub;
    for (std::size_t i = 0; i < l; ++i)
      if (mask >> i & 1) sub.push_back(v_word[i]);
    if (from_word(rs, sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("group orders") {
    const std::vector<std::pair<std::string, std::size_t>> cases = {
        {"A1", 2}, {"A2", 6}, {"A3", 24}, {"A4", 120}, {"B2", 8}, {"B3", 48},
        {"C3", 48}, {"D4", 192}, {"G2", 12}, {"F4", 1152}, {"A1xA1", 4}, {"A1xA2", 12}};
    for (const auto& [name, order] : cases) {
      CAPTURE(name);
      CHECK(enumerate_group(make_system(name)).size() == order);
    }
  }

  TEST_CASE("longest elements") {
    const RootSystem a2 = make_system("A2");
    const WeylElem w0 = longest_element(a2);
    CHECK(canonical_reduced_word(a2, w0) == Word{1, 2, 1});
    CHECK(all_reduced_words(a2, w0) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(act(w0, W(a2, "(1,1)")) == W(a2, "(-1,-1)"));
    // reduced-word counts of w0: 16 in A3, 2 in B2 and G2, 42 in B3
    CHECK(all_reduced_words(make_system("A3"), longest_element(make_system("A3"))).size() == 16);
    CHECK(all_reduced_words(make_system("B2"), longest_element(make_system("B2"))).size() == 2);
    CHECK(all_reduced_words(make_system("G2"), longest_element(make_system("G2"))).size() == 2);
    CHECK(all_reduced_words(make_system("B3"), longest_element(make_system("B3"))).size() == 42);
    for (const char* name : {"A3", "B3", "G2", "D4"}) {
      const RootSystem rs = make_system(name);
      CHECK(length(rs, longest_element(rs)) == static_cast<int>(rs.num_positive_roots()));
    }
  }

  TEST_CASE("length is breadth-first depth and the enumeration is sorted") {
    for (const char* name : {"A3", "B3", "G2"}) {
      CAPTURE(name);
      const RootSystem rs = make_system(name);
      const auto group = enumerate_group(rs);
      for (std::size_t i = 1; i < group.size(); ++i) {
        const int a = length(rs, group[i - 1]), b = length(rs, group[i]);
        CHECK((a < b || (a == b && group[i - 1] < group[i])));
      }
      for (const auto& w : group) {
        const Word word = canonical_reduced_word(rs, w);
        CHECK(static_cast<int>(word.size()) == length(rs, w));
        CHECK(from_word(rs, word) == w);
      }
    }
  }

  TEST_CASE("group laws") {
    const RootSystem rs = make_system("B3");
    const auto group = enumerate_group(rs);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    const Weight mu = W(rs, "(1/2,-1,3)");
    for (int k = 0; k < 200; ++k) {
      const WeylElem& u = group[pick(rng)];
      const WeylElem& v = group[pick(rng)];
      const WeylElem& x = group[pick(rng)];
      CHECK(multiply(multiply(u, v), x) == multiply(u, multiply(v, x)));
      CHECK(act(multiply(u, v), mu) == act(u, act(v, mu)));
      CHECK(multiply(u, inverse(u)).is_identity());
      CHECK(length(rs, u) == length(rs, inverse(u)));
    }
    CHECK(from_word(rs, {1, 1}).is_identity());
  }

  TEST_CASE("root reflections") {
    const RootSystem rs = make_system("A2");
    const Root theta{{1, 1}};
    CHECK(reflection(rs, theta) == elem(rs, "121"));
    CHECK(act(rs, elem(rs, "1"), Root{{0, 1}}) == theta);
  }

  TEST_CASE("descents") {
    const RootSystem rs = make_system("A2");
    const WeylElem u = elem(rs, "12");
    CHECK(is_left_descent(rs, u, 1));
    CHECK_FALSE(is_left_descent(rs, u, 2));
  }

  TEST_CASE("Bruhat order agrees with the subword property") {
    for (const char* name : {"A2", "B2", "A3"}) {
      CAPTURE(name);
      const RootSystem rs = make_system(name);
      const auto group = enumerate_group(rs);
      for (const auto& v : group) {
        const auto words = all_reduced_words(rs, v);
        const Word& other = words.back();  // generally not the canonical word
        for (const auto& u : group) CHECK(bruhat_leq(rs, u, v) == subword_leq(rs, u, other));
      }
    }
    const RootSystem a2 = make_system("A2");
    CHECK(bruhat_leq(a2, elem(a2, "1"), elem(a2, "12")));
    CHECK_FALSE(bruhat_leq(a2, elem(a2, "2"), elem(a2, "1")));
  }

  TEST_CASE("group orders from the classification") {
    for (const char* name : {"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "A1xA2", "D4"})
      CHECK(weyl_group_order(make_system(name).spec()) == enumerate_group(make_system(name)).size());
    CHECK(weyl_group_order(make_system("E8").spec()) == 696729600u);
    CHECK(weyl_group_order(make_system("F4").spec()) == 1152u);
    CHECK(weyl_group_order(make_system("A30").spec()) == SIZE_MAX);
  }

  TEST_CASE("errors") {
    const RootSystem a2 = make_system("A2");
    CHECK_THROWS_AS(simple_reflection(a2, 0), DomainError);
    CHECK_THROWS_AS(simple_reflection(a2, 3), DomainError);
    CHECK_THROWS_AS(multiply(identity(a2), identity(make_system("B2"))), DomainError);
    CHECK_THROWS_AS(enumerate_group(make_system("A3"), 10), BoundExceeded);
    CHECK_THROWS_AS(all_reduced_words(make_system("A3"), longest_element(make_system("A3")), 5), BoundExceeded);
    CHECK_THROWS_AS(enumerate_group(make_system("E8")), BoundExceeded);
  }

  TEST_CASE("reflection subgroups") {
    const RootSystem rs = make_system("A2");
    CHECK(reflection_subgroup(rs, {}).size() == 1);
    CHECK(reflection_subgroup(rs, {Root{{1, 1}}}).size() == 2);
    CHECK(reflection_subgroup(rs, {Root{{1, 0}}, Root{{0, 1}}}).size() == 6);
    const RootSystem b2 = make_system("B2");
    // long roots of B2 form A1 x A1
    CHECK(reflection_subgroup(b2, {Root{{1, 0}}, Root{{1, 2}}}).size() == 4);
  }

  TEST_CASE("word printing") {
    CHECK(to_string(Word{}) == "e");
    CHECK(to_string(Word{1, 2, 1}) == "s1 s2 s1");
  }
}
