#include <doctest.h>

#include "intertwine/errors.hpp"
#include "intertwine/oracle.hpp"
#include "support/brute.hpp"
#include "support/helpers.hpp"

using namespace intertwine;
using testing::root;
using testing::make_system;
using testing::W;

TEST_SUITE("oracle") {
  TEST_CASE("strong linkage basics") {
    const RootSystem a1 = make_system("A1");
    const auto same = oracle::bgg_verma_hom(a1, W(a1, "(2)"), W(a1, "(2)"));
    CHECK(same.linked);
    REQUIRE(same.chain.has_value());
    CHECK(same.chain->steps.empty());

    CHECK(oracle::strongly_linked_below(a1, W(a1, "(3)")) == std::vector<Weight>{W(a1, "(-3)"), W(a1, "(3)")});
    CHECK(oracle::strongly_linked_below(a1, W(a1, "(-3)")) == std::vector<Weight>{W(a1, "(-3)")});
    CHECK(oracle::strongly_linked_below(a1, W(a1, "(1/2)")).size() == 1);

    const RootSystem a2 = make_system("A2");
    const auto below = oracle::strongly_linked_below(a2, a2.rho());
    CHECK(below.size() == 6);
    for (const auto& mu : below) {
      const auto r = oracle::bgg_verma_hom(a2, mu, a2.rho());
      CHECK(r.linked);
      CHECK(oracle::validate_chain(a2, *r.chain));
    }
  }

  TEST_CASE("tampered chains fail validation") {
    const RootSystem a2 = make_system("A2");
    auto r = oracle::bgg_verma_hom(a2, W(a2, "(-1,-1)"), a2.rho());
    REQUIRE(r.linked);
    oracle::LinkageChain chain = *r.chain;
    REQUIRE(!chain.steps.empty());
    chain.steps.back().result = a2.rho();
    CHECK_FALSE(oracle::validate_chain(a2, chain));
    oracle::LinkageChain upward{W(a2, "(-1,-1)"), {{root({1, 1}), a2.rho()}}};
    CHECK_FALSE(oracle::validate_chain(a2, upward));
  }

  TEST_CASE("brute force matches the stand-alone reference") {
    for (const char* name : {"A2", "B2", "G2"}) {
      const RootSystem rs = make_system(name);
      std::vector<Root> letters;
      std::vector<int> idx;
      for (int i : {1, 2, 1, 2}) {
        letters.push_back(rs.simple_root(i));
        idx.push_back(i - 1);
      }
      CHECK(oracle::beta_sequence_by_reflection(rs, letters) == beta_sequence(rs, letters));
      for (const auto& mu : oracle::integral_box(2, 2)) {
        const auto got = oracle::brute_force_a_set(rs, letters, mu);
        const auto ref = brute::a_set(brute::cartan(name), idx, mu.coords());
        REQUIRE(got.size() == ref.size());
        auto it = ref.begin();
        for (const auto& [nu, pos] : got) {
          CHECK(nu.coords() == it->first);
          CHECK(pos == it->second);
          ++it;
        }
      }
    }
    const RootSystem a1 = make_system("A1");
    CHECK_THROWS_AS(oracle::brute_force_a_set(a1, std::vector<Root>(21, root({1})), W(a1, "(0)")), BoundExceeded);
  }

  TEST_CASE("grids") {
    CHECK(oracle::integral_box(2, 2).size() == 25);
    CHECK(oracle::integral_box(3, 1).size() == 27);
    CHECK(oracle::shifted_box(1, 1, Rational(1, 2)) ==
          std::vector<Weight>{Weight{Rational(-1, 2)}, Weight{Rational(1, 2)}, Weight{Rational(3, 2)}});
    CHECK(oracle::pattern_grid(2).size() == 49);
    const RootSystem b2 = make_system("B2");
    for (const auto& l : oracle::dominant_lambda_samples(b2, 2)) CHECK(b2.is_dominant(l));
    std::mt19937_64 a(1), b(1);
    CHECK(oracle::random_weight(a, 3) == oracle::random_weight(b, 3));
    CHECK(oracle::random_pairs(b2, 20, 5) == oracle::random_pairs(b2, 20, 5));
  }

  TEST_CASE("corrupted recursions are caught") {
    const RootSystem rs = make_system("A2");
    const auto grid = oracle::integral_box(2, 1);
    // drop the largest element of every nontrivial A-set
    const oracle::WordASetFn lossy = [](const RootSystem& r, const std::vector<Root>& letters, const Weight& mu,
                                        const IntegralData& ctx) {
      ASet s = a_set_word(r, letters, mu, ctx);
      if (s.size() > 1) s.elements.erase(std::prev(s.elements.end()));
      return s;
    };
    CHECK_FALSE(oracle::check_against_definition(rs, grid, lossy).passed());
    // word-order dependent corruption: only damages words starting with s2
    const oracle::WordASetFn biased = [&](const RootSystem& r, const std::vector<Root>& letters, const Weight& mu,
                                          const IntegralData& ctx) {
      ASet s = a_set_word(r, letters, mu, ctx);
      if (!letters.empty() && letters.front() == r.simple_root(2) && s.size() > 1)
        s.elements.erase(std::prev(s.elements.end()));
      return s;
    };
    const auto report = oracle::check_word_independence(rs, grid, biased);
    CHECK_FALSE(report.passed());
    CHECK(oracle::to_string(report).find("[FAIL]") == 0);

    const ASetProvider trivial = [](const RootSystem&, const WeylElem&, const Weight& mu, const IntegralData&) {
      ASet out;
      out.elements.emplace(mu, Certificate{});
      return out;
    };
    CHECK_FALSE(oracle::check_bgg_equivalence(rs, oracle::all_pairs(grid), trivial).passed());
  }

  TEST_CASE("weight-lattice form of W_lambda has counterexamples") {
    const RootSystem a1 = make_system("A1");
    const auto p_form = oracle::check_weight_lattice_membership(a1, {W(a1, "(1/2)")});
    CHECK_FALSE(p_form.passed());
    CHECK(oracle::check_root_lattice_membership(a1, {W(a1, "(1/2)")}).passed());
  }

  TEST_CASE("sweep systems") {
    CHECK(oracle::sweep_systems(2).size() == 5);
    for (const auto& spec : oracle::sweep_systems(3)) CHECK(spec.rank() <= 3);
  }
}
