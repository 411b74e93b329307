// Acceptance checks: one line per criterion, tolerances fixed below.
//   acceptance               run all
//   acceptance --criterion N run one (used by ctest)

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"
#include "intertwine/criteria.hpp"
#include "intertwine/oracle.hpp"
#include "intertwine/parse.hpp"
#include "support/brute.hpp"

using namespace intertwine;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::size_t sweeps = 0, sweeps_passed = 0;
  std::vector<std::string> notes;  // printed under the line when the criterion fails

  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void absorb(const oracle::SweepReport& r) {
    cases += r.cases;
    ++sweeps;
    if (r.passed()) ++sweeps_passed;
    else fail(oracle::to_string(r));
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

RootSystem sys(const char* name) { return RootSystem(parse_root_system_spec(name)); }

std::vector<Weight> merged(std::vector<Weight> a, const std::vector<Weight>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

// Weights for the word-level sweeps.
std::vector<Weight> word_grid(int rank) {
  if (rank <= 2) return merged(oracle::integral_box(rank, 2), oracle::pattern_grid(rank));
  return merged(oracle::integral_box(rank, 2),
                oracle::product_grid(rank, {Rational(-1, 2), Rational(1, 3), Rational(1)}));
}

// --- 1 -----------------------------------------------------------------------------

Outcome rank_one() {
  Outcome o;
  const RootSystem rs = sys("A1");
  const WeylElem e = identity(rs);
  std::vector<Rational> ms;
  for (int m = -3; m <= 3; ++m) ms.emplace_back(m);
  ms.emplace_back(1, 2);
  ms.emplace_back(-1, 2);
  for (const Rational& m : ms) {
    for (int num = -12; num <= 12; ++num) {
      const Rational x(num, 2);
      const bool expected = x == m || (x == -m && is_positive_integer(m));
      ++o.cases;
      if (hom_twisted_verma(rs, {e, Weight{x}, e, Weight{m}}).hom_nonzero != expected)
        o.fail("m = " + to_string(m) + ", mu1 = " + to_string(x));
    }
  }
  return o;
}

// --- 2 -----------------------------------------------------------------------------

Outcome bgg_equivalence() {
  Outcome o;
  for (const char* name : {"A1", "A2", "B2", "A3"}) {
    const RootSystem rs = sys(name);
    o.absorb(oracle::check_bgg_equivalence(rs, oracle::all_pairs(oracle::integral_box(rs.rank(), 2))));
    o.absorb(oracle::check_bgg_equivalence(rs, oracle::random_pairs(rs, 1000, 20240229)));
  }
  return o;
}

// --- 3, 4 --------------------------------------------------------------------------

Outcome word_independence() {
  Outcome o;
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const RootSystem rs = sys(name);
    o.absorb(oracle::check_word_independence(rs, word_grid(rs.rank())));
  }
  return o;
}

Outcome concatenation() {
  Outcome o;
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    const RootSystem rs = sys(name);
    o.absorb(oracle::check_concatenation(rs, word_grid(rs.rank())));
  }
  return o;
}

// --- 5 -----------------------------------------------------------------------------

Outcome worked_example() {
  Outcome o;
  // reference first, from the hand-typed Cartan matrix
  const auto A = brute::cartan("A2");
  const auto ref_minus = brute::a_set(A, {0, 1, 0}, brute::vec({-1, -1}));
  const auto ref_plus = brute::a_set(A, {0, 1, 0}, brute::vec({1, 1}));
  const auto orbit = brute::orbit(A, brute::vec({-1, -1}));
  if (ref_minus.size() != 6 || ref_plus.size() != 1) o.fail("reference enumeration has unexpected size");
  for (const auto& [v, pos] : ref_minus)
    if (!orbit.count(v)) o.fail("reference element outside the orbit");

  const RootSystem rs = sys("A2");
  const IntegralData ctx = integral_data(rs, rs.rho());
  const WeylElem w0 = longest_element(rs);
  const std::vector<Root> letters = letters_of(ctx, integral_reduced_word(rs, w0, ctx));
  for (const auto* ref : {&ref_minus, &ref_plus}) {
    const Weight mu(ref == &ref_minus ? brute::vec({-1, -1}) : brute::vec({1, 1}));
    const ASet got = a_set(rs, w0, mu, ctx);
    ++o.cases;
    if (got.size() != ref->size()) o.fail("A_{w0}" + to_string(mu) + " has " + std::to_string(got.size()) + " elements");
    for (const auto& [v, pos] : *ref) {
      auto it = got.elements.find(Weight(v));
      if (it == got.elements.end()) {
        o.fail(to_string(Weight(v)) + " missing from A_{w0}" + to_string(mu));
        continue;
      }
      ++o.cases;
      const auto replay = replay_certificate(rs, letters, mu, it->second);
      if (!replay || !(*replay == it->first)) o.fail("certificate of " + to_string(it->first) + " does not replay");
      if (it->second.positions != pos) o.fail("certificate of " + to_string(it->first) + " is not the first one");
    }
  }
  return o;
}

// --- 6 -----------------------------------------------------------------------------

Outcome invariances() {
  Outcome o;
  for (const auto& spec : oracle::sweep_systems(2)) {
    const RootSystem rs(spec);
    o.absorb(oracle::check_reflexivity(rs, word_grid(rs.rank()), oracle::dominant_lambda_samples(rs, 2), 1));
  }
  const RootSystem a2 = sys("A2");
  for (const char* lam : {"(0,1)", "(1,0)", "(0,0)"})
    o.absorb(oracle::check_stabilizer_invariance(a2, parse_weight(lam, 2), 2));
  for (const char* name : {"A2", "B2", "G2"}) {
    const RootSystem rs = sys(name);
    std::vector<Weight> seeds;
    for (const char* s : {"(1,1)", "(0,0)", "(1,0)", "(0,1)", "(2,1)", "(1/2,1/2)", "(1/2,0)", "(1/3,1)"})
      seeds.push_back(parse_weight(s, 2));
    o.absorb(oracle::check_simple_reflection_invariance(rs, oracle::orbit_closure(rs, seeds)));
  }
  return o;
}

// --- 7 -----------------------------------------------------------------------------

Outcome parameter_reduction() {
  Outcome o;
  for (const char* name : {"A2", "B2"}) {
    const RootSystem rs = sys(name);
    std::vector<Weight> lambdas = oracle::integral_box(2, 2);
    lambdas = merged(lambdas, oracle::shifted_box(2, 2, Rational(1, 2)));
    lambdas = merged(lambdas, oracle::shifted_box(2, 2, Rational(1, 3)));
    lambdas = merged(lambdas, oracle::product_grid(2, {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3),
                                                       Rational(1, 2), Rational(2, 3), Rational(1)}));
    o.absorb(oracle::check_reduce_parameters(rs, lambdas));
  }
  return o;
}

// --- 8 -----------------------------------------------------------------------------

Outcome integral_structure() {
  Outcome o;
  for (const auto& spec : oracle::sweep_systems(3)) {
    const RootSystem rs(spec);
    const int n = rs.rank();
    std::vector<Weight> lambdas = oracle::integral_box(n, 1);
    lambdas = merged(lambdas, oracle::shifted_box(n, 1, Rational(1, 2)));
    lambdas = merged(lambdas, oracle::shifted_box(n, 1, Rational(1, 3)));
    lambdas = merged(lambdas, oracle::product_grid(n, {Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1, 2),
                                                       Rational(1)}));
    o.absorb(oracle::check_integral_structure(rs, lambdas));
    o.absorb(oracle::check_root_lattice_membership(rs, lambdas));
    o.absorb(oracle::check_weight_lattice_membership(rs, lambdas));
  }
  return o;
}

// --- 9 -----------------------------------------------------------------------------

struct Captured {
  int code;
  std::string out, err;
};

Captured cli_run(const std::vector<std::string>& args, const std::optional<std::string>& cache) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, cache);
  return {code, out.str(), err.str()};
}

Outcome cli_determinism() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("intertwine-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::string cache = dir.string();

  const std::vector<std::vector<std::string>> queries = {
      {"hom-verma", "A2", "e", "(1,1)", "e", "(1,1)", "--format", "json"},
      {"hom-ps", "A1", "--lambda", "(1)", "e", "(1)", "e", "(-1)", "--format", "json"},
      {"aset", "B2", "s1s2s1s2", "(-1,-1)", "--format", "json"},
      {"table", "A2", "--mu-orbit", "(1,1)", "--w-all", "--format", "json"},
      {"table", "B2", "--mu-orbit", "(1,0)", "--w-all", "--format", "tsv"},
  };
  for (const auto& q : queries) {
    auto bypass = q;
    bypass.push_back("--no-cache");
    const Captured a = cli_run(q, cache), b = cli_run(q, cache), c = cli_run(bypass, cache);
    o.cases += 3;
    const std::string label = q[0] + " " + q[1];
    if (a.code != 0) o.fail(label + ": exit " + std::to_string(a.code));
    if (a.out != b.out) o.fail(label + ": repeated run differs");
    if (a.out != c.out) o.fail(label + ": --no-cache differs");
    if (q[0] != "hom-ps" && b.err.find(" 0 hits") != std::string::npos) o.fail(label + ": second run had no cache hits");
  }

  // corrupt every entry: output must not change
  for (const auto& e : fs::directory_iterator(dir)) std::ofstream(e.path(), std::ios::trunc) << "corrupt";
  const Captured again = cli_run(queries[3], cache), bypass = cli_run({"table", "A2", "--mu-orbit", "(1,1)", "--w-all",
                                                                        "--format", "json", "--no-cache"}, cache);
  ++o.cases;
  if (again.out != bypass.out) o.fail("corrupted cache changed the table");

  // row counts: |W|^2 |orbit|^2
  for (const auto& [name, mu] : std::vector<std::pair<std::string, std::string>>{{"A2", "(1,1)"}, {"B2", "(1,0)"},
                                                                                  {"G2", "(0,1)"}}) {
    const RootSystem rs = RootSystem(parse_root_system_spec(name));
    const std::size_t g = enumerate_group(rs).size();
    const std::size_t orb = oracle::orbit_closure(rs, {parse_weight(mu, 2)}).size();
    const Captured t = cli_run({"table", name, "--mu-orbit", mu, "--w-all", "--format", "json", "--no-cache"}, {});
    const auto rows = nlohmann::json::parse(t.out)["row_count"].get<std::size_t>();
    ++o.cases;
    if (rows != g * g * orb * orb)
      o.fail(name + " table has " + std::to_string(rows) + " rows, expected " + std::to_string(g * g * orb * orb));
  }
  fs::remove_all(dir);
  return o;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "rank-one twisted Verma criterion", 1.0, rank_one},
      {2, "twisted Verma criterion equals strong linkage", 60.0, bgg_equivalence},
      {3, "A-sets independent of the reduced word", 120.0, word_independence},
      {4, "concatenation identity at every split", 120.0, concatenation},
      {5, "A2 worked example with certificates", 1.0, worked_example},
      {6, "criterion invariances", 60.0, invariances},
      {7, "parameter reduction postcondition", 60.0, parameter_reduction},
      {8, "integral root system structure", 120.0, integral_structure},
      {9, "CLI determinism and cache transparency", 60.0, cli_determinism},
  };
  return all;
}

bool run_one(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= c.limit_seconds) o.fail("time limit exceeded");
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title << " (" << o.cases
            << " cases, " << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0)
            << c.limit_seconds << " s)\n";
  if (!o.pass && o.sweeps)
    std::cout << "       " << o.sweeps_passed << " of " << o.sweeps << " sub-sweeps passed\n";
  for (const auto& n : o.notes) std::cout << "       " << n << '\n';
  std::cout.flush();
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool ok = true, found = false;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    found = true;
    ok = run_one(c) && ok;
  }
  if (!found) {
    std::cerr << "no criterion " << only << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
