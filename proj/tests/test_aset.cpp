#include <doctest.h>

#include <set>

#include "intertwine/aset.hpp"
#include "intertwine/errors.hpp"
#include "support/brute.hpp"
#include "support/helpers.hpp"

using namespace intertwine;
using testing::elem;
using testing::root;
using testing::make_system;
using testing::W;

namespace {

std::vector<Root> simple_letters(const RootSystem& rs, const Word& w) {
  std::vector<Root> out;
  for (int i : w) out.push_back(rs.simple_root(i));
  return out;
}

brute::Vec to_vec(const Weight& w) { return w.coords(); }

// Compares with the stand-alone reference on a word given by simple indices.
void check_against_reference(const std::string& name, const Word& word, const Weight& mu) {
  const RootSystem rs = make_system(name);
  const IntegralData ctx = integral_data(rs, rs.rho());
  std::vector<int> zero_based;
  for (int i : word) zero_based.push_back(i - 1);
  const auto expected = brute::a_set(brute::cartan(name), zero_based, to_vec(mu));
  const ASet got = a_set_word(rs, simple_letters(rs, word), mu, ctx);
  REQUIRE(got.size() == expected.size());
  auto it = expected.begin();
  for (const auto& [nu, cert] : got.elements) {
    CHECK(to_vec(nu) == it->first);
    CHECK(cert.positions == it->second);
    ++it;
  }
}

}  // namespace

TEST_SUITE("aset") {
  TEST_CASE("rank one") {
    const RootSystem rs = make_system("A1");
    const IntegralData ctx = integral_data(rs, rs.rho());
    const WeylElem s = elem(rs, "1");
    CHECK(a_set(rs, s, W(rs, "(-3)"), ctx).weights() == std::vector<Weight>{W(rs, "(-3)"), W(rs, "(3)")});
    CHECK(a_set(rs, s, W(rs, "(3)"), ctx).weights() == std::vector<Weight>{W(rs, "(3)")});
    CHECK(a_set(rs, s, W(rs, "(-1/2)"), ctx).weights() == std::vector<Weight>{W(rs, "(-1/2)")});
    CHECK(a_set(rs, s, W(rs, "(0)"), ctx).weights() == std::vector<Weight>{W(rs, "(0)")});
  }

  TEST_CASE("A2 longest element at -rho: the whole orbit") {
    const RootSystem rs = make_system("A2");
    const IntegralData ctx = integral_data(rs, rs.rho());
    const Weight mu = W(rs, "(-1,-1)");
    // reference: all 8 subsequences over beta = (a1, a1+a2, a2)
    const auto ref = brute::a_set(brute::cartan("A2"), {0, 1, 0}, to_vec(mu));
    const auto orbit = brute::orbit(brute::cartan("A2"), to_vec(mu));
    REQUIRE(ref.size() == 6);
    std::set<brute::Vec> ref_keys;
    for (const auto& [v, pos] : ref) ref_keys.insert(v);
    CHECK(ref_keys == orbit);

    const ASet set = a_set(rs, longest_element(rs), mu, ctx);
    CHECK(set.size() == 6);
    for (const auto& [v, pos] : ref) CHECK(set.contains(Weight(v)));
    CHECK(beta_sequence(rs, simple_letters(rs, {1, 2, 1})) == std::vector<Root>{root({1, 0}), root({1, 1}), root({0, 1})});
    CHECK(beta_sequence(rs, simple_letters(rs, {2, 1, 2})) == std::vector<Root>{root({0, 1}), root({1, 1}), root({1, 0})});
    const auto all = a_set_all_words(rs, longest_element(rs), mu, ctx);
    REQUIRE(all.size() == 2);
    CHECK(all[0].same_elements(all[1]));
    CHECK(all[0].same_elements(set));
  }

  TEST_CASE("A2 longest element at rho and the identity") {
    const RootSystem rs = make_system("A2");
    const IntegralData ctx = integral_data(rs, rs.rho());
    CHECK(a_set(rs, longest_element(rs), rs.rho(), ctx).weights() == std::vector<Weight>{rs.rho()});
    const Weight mu = W(rs, "(-2,1/3)");
    CHECK(a_set(rs, identity(rs), mu, ctx).weights() == std::vector<Weight>{mu});
  }

  TEST_CASE("agrees with the stand-alone reference, including non-reduced words") {
    const std::vector<Word> words = {{1, 2, 1}, {2, 1, 2, 1}, {1, 1}, {1, 2, 1, 2, 1, 2}, {2, 1, 2}, {1, 2, 2, 1}};
    for (const char* name : {"A2", "B2", "C2", "G2"}) {
      for (const auto& word : words) {
        for (const char* mu : {"(-1,-1)", "(-2,1)", "(0,-1)", "(-1/2,-1)", "(1,-3)", "(-3,-2)"}) {
          CAPTURE(name);
          CAPTURE(mu);
          check_against_reference(name, word, W(make_system(name), mu));
        }
      }
    }
    for (const char* name : {"A3", "B3", "C3"})
      for (const char* mu : {"(-1,-1,-1)", "(-1,0,-2)", "(1,-2,1/2)"})
        check_against_reference(name, {1, 2, 3, 1, 2, 1}, W(make_system(name), mu));
  }

  TEST_CASE("size bounds and certificates") {
    const RootSystem rs = make_system("B2");
    const IntegralData ctx = integral_data(rs, rs.rho());
    for (const auto& w : enumerate_group(rs)) {
      const auto letters = letters_of(ctx, integral_reduced_word(rs, w, ctx));
      for (const char* text : {"(-1,-1)", "(2,-3)", "(1/2,-1)", "(1/3,1/5)"}) {
        const Weight mu = W(rs, text);
        const ASet set = a_set(rs, w, mu, ctx);
        CHECK(set.contains(mu));
        CHECK(set.size() >= 1);
        CHECK(set.size() <= (std::size_t{1} << letters.size()));
        for (const auto& [nu, cert] : set.elements) {
          const auto replay = replay_certificate(rs, letters, mu, cert);
          REQUIRE(replay.has_value());
          CHECK(*replay == nu);
        }
      }
      // no pairing can be integral: singleton
      CHECK(a_set(rs, w, W(rs, "(1/3,1/5)"), ctx).size() == 1);
    }
  }

  TEST_CASE("tampered certificates are rejected") {
    const RootSystem rs = make_system("A2");
    const IntegralData ctx = integral_data(rs, rs.rho());
    const auto letters = simple_letters(rs, {1, 2, 1});
    const Weight mu = W(rs, "(-1,-1)");
    const ASet set = a_set_word(rs, letters, mu, ctx);
    const Certificate cert = set.elements.at(W(rs, "(1,1)"));
    REQUIRE(cert.positions == std::vector<int>{1, 2, 3});
    Certificate reordered = cert;
    std::swap(reordered.positions[0], reordered.positions[1]);
    CHECK_FALSE(replay_certificate(rs, letters, mu, reordered).has_value());
    Certificate wrong_root = cert;
    wrong_root.roots[0] = root({0, 1});
    CHECK_FALSE(replay_certificate(rs, letters, mu, wrong_root).has_value());
    Certificate out_of_range{{4}, {root({1, 0})}};
    CHECK_FALSE(replay_certificate(rs, letters, mu, out_of_range).has_value());
    // position 2 alone: <(a1+a2)^vee, mu> = -2 qualifies; position 3 after it does not
    Certificate ok{{2}, {root({1, 1})}};
    CHECK(replay_certificate(rs, letters, mu, ok) == std::optional<Weight>(W(rs, "(1,1)")));
  }

  TEST_CASE("domain errors") {
    const RootSystem rs = make_system("A2");
    const IntegralData half = integral_data(rs, W(rs, "(1/2,1/2)"));
    CHECK_THROWS_AS(a_set_word(rs, {root({1, 0})}, rs.rho(), half), DomainError);
    CHECK_THROWS_AS(a_set(rs, elem(rs, "1"), rs.rho(), half), DomainError);
    CHECK_THROWS_AS(letters_of(half, {2}), DomainError);
    const IntegralData full = integral_data(rs, rs.rho());
    CHECK_THROWS_AS(a_set(rs, elem(rs, "1"), W(make_system("A3"), "(1,1,1)"), full), DomainError);
  }

  TEST_CASE("A-sets over a proper integral subsystem") {
    const RootSystem rs = make_system("A2");
    const IntegralData ctx = integral_data(rs, W(rs, "(1/2,1/2)"));
    const WeylElem st = ctx.longest;  // s_{a1+a2}
    const Weight mu = W(rs, "(-1/2,-1/2)");  // pairs to -1 with a1+a2
    CHECK(a_set(rs, st, mu, ctx).weights() == std::vector<Weight>{mu, W(rs, "(1/2,1/2)")});
  }
}
