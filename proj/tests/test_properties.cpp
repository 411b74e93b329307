#include <doctest.h>

#include <random>

#include "intertwine/criteria.hpp"
#include "intertwine/oracle.hpp"
#include "query.hpp"
#include "support/helpers.hpp"

using namespace intertwine;
using testing::make_system;

namespace {

Weight random_weight(std::mt19937_64& rng, int rank) { return oracle::random_weight(rng, rank, 4, 3); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("selfcheck sweeps pass up to rank two") {
    oracle::SelfcheckConfig cfg;
    cfg.rank_bound = 2;
    cfg.grid_radius = 1;
    cfg.random_pairs = 100;
    for (const auto& r : oracle::run_selfcheck(cfg)) {
      INFO(oracle::to_string(r));
      CHECK(r.passed());
      CHECK(r.cases > 0);
    }
  }

  TEST_CASE("selfcheck reports are deterministic") {
    oracle::SelfcheckConfig cfg;
    cfg.rank_bound = 1;
    const auto a = oracle::run_selfcheck(cfg), b = oracle::run_selfcheck(cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(oracle::to_string(a[i]) == oracle::to_string(b[i]));
  }

  TEST_CASE("random weights: pairing is linear and reflections are isometries") {
    std::mt19937_64 rng(11);
    for (const char* name : {"B3", "G2", "C3", "A1xB2"}) {
      const RootSystem rs = make_system(name);
      for (int k = 0; k < 100; ++k) {
        const Weight a = random_weight(rng, rs.rank()), b = random_weight(rng, rs.rank());
        for (const auto& beta : rs.positive_roots()) {
          CHECK(rs.pairing(beta, a + b) == rs.pairing(beta, a) + rs.pairing(beta, b));
          CHECK(rs.reflect(beta, rs.reflect(beta, a)) == a);
          CHECK(rs.pairing(beta, rs.reflect(beta, a)) == -rs.pairing(beta, a));
        }
      }
    }
  }

  TEST_CASE("random weights: A-set invariants") {
    std::mt19937_64 rng(12);
    for (const char* name : {"A3", "B3"}) {
      const RootSystem rs = make_system(name);
      const IntegralData ctx = integral_data(rs, rs.rho());
      const auto group = enumerate_group(rs);
      std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
      for (int k = 0; k < 200; ++k) {
        const WeylElem& w = group[pick(rng)];
        // integral weights make the negativity condition fire often
        Weight mu = oracle::random_weight(rng, rs.rank(), 1, 3);
        const ASet set = a_set(rs, w, mu, ctx);
        CHECK(set.contains(mu));
        CHECK(set.size() <= (std::size_t{1} << length(rs, w)));
        for (const auto& nu : set.weights()) {
          // every element lies in the W-orbit of mu
          CHECK(oracle::orbit_closure(rs, {mu}) == oracle::orbit_closure(rs, {nu}));
        }
      }
    }
  }

  TEST_CASE("random pairs: Verma criterion matches strong linkage in rank three") {
    for (const char* name : {"A3", "B3"}) {
      const RootSystem rs = make_system(name);
      const auto report = oracle::check_bgg_equivalence(rs, oracle::random_pairs(rs, 150, 99));
      INFO(oracle::to_string(report));
      CHECK(report.passed());
    }
  }

  TEST_CASE("generic vanishing across orbits") {
    std::mt19937_64 rng(13);
    const RootSystem rs = make_system("B2");
    const auto group = enumerate_group(rs);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    int checked = 0;
    for (int k = 0; k < 300; ++k) {
      const Weight mu1 = random_weight(rng, 2), mu2 = random_weight(rng, 2);
      const auto orbit = oracle::orbit_closure(rs, {mu2});
      if (std::binary_search(orbit.begin(), orbit.end(), mu1)) continue;
      ++checked;
      CHECK_FALSE(hom_twisted_verma(rs, {group[pick(rng)], mu1, group[pick(rng)], mu2}).hom_nonzero);
    }
    CHECK(checked > 200);
  }

  TEST_CASE("queries round-trip through their canonical form") {
    std::mt19937_64 rng(14);
    const std::vector<std::string> systems = {"A1", "A2", "B2", "G2", "A1xA1", "B3", "C3"};
    for (int k = 0; k < 200; ++k) {
      const RootSystem rs = make_system(systems[rng() % systems.size()]);
      cli::Query q;
      q.system = rs.spec();
      q.format = static_cast<cli::Format>(rng() % 3);
      q.no_cache = rng() % 2;
      const auto group = enumerate_group(rs);
      auto some_word = [&] { return canonical_reduced_word(rs, group[rng() % group.size()]); };
      switch (rng() % 4) {
        case 0:
          q.command = cli::Command::aset;
          q.words = {some_word()};
          q.weights = {random_weight(rng, rs.rank())};
          q.certificates = rng() % 2;
          if (rng() % 2) q.lambda = random_weight(rng, rs.rank());
          break;
        case 1:
          q.command = cli::Command::hom_verma;
          q.words = {some_word(), some_word()};
          q.weights = {random_weight(rng, rs.rank()), random_weight(rng, rs.rank())};
          break;
        case 2:
          q.command = cli::Command::hom_ps;
          q.words = {some_word(), some_word()};
          q.weights = {random_weight(rng, rs.rank()), random_weight(rng, rs.rank())};
          q.lambda = random_weight(rng, rs.rank());
          q.normalize = rng() % 2;
          break;
        default:
          q.command = cli::Command::table;
          q.mu_orbit = random_weight(rng, rs.rank());
          q.w_all = rng() % 2;
          q.grid_radius = static_cast<int>(rng() % 3);
          break;
      }
      const std::string text = cli::to_canonical_string(q);
      CAPTURE(text);
      const cli::ParsedArgs back = cli::parse_args(cli::split_canonical(text));
      CHECK(back.query == q);
      CHECK(cli::to_canonical_string(back.query) == text);
    }
  }
}
