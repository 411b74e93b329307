#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "intertwine/aset.hpp"
#include "intertwine/criteria.hpp"
#include "intertwine/integral.hpp"
#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

// Independent validators. Nothing here calls the A-set recursion except
// through the function objects passed in by the caller.

namespace intertwine::oracle {

// ---------------------------------------------------------------------------
// Strong linkage (Verma / BGG)

struct LinkageStep {
  Root root;
  Weight result;
};

/// Descending reflection chain; every step reflects in a positive root whose
/// coroot pairs with the current weight to a positive integer.
struct LinkageChain {
  Weight start;
  std::vector<LinkageStep> steps;
};

struct LinkageResult {
  bool linked = false;
  std::optional<LinkageChain> chain;
};

/// Hom(M(mu1), M(mu2)) != 0 by breadth-first search from mu2.
LinkageResult bgg_verma_hom(const RootSystem& rs, const Weight& mu1, const Weight& mu2);

/// Every weight reachable from mu by such chains, sorted.
std::vector<Weight> strongly_linked_below(const RootSystem& rs, const Weight& mu);

bool validate_chain(const RootSystem& rs, const LinkageChain& chain);

// ---------------------------------------------------------------------------
// Subsequence brute force

/// beta-sequence computed by reflecting roots as weights, without WeylElem.
std::vector<Root> beta_sequence_by_reflection(const RootSystem& rs, const std::vector<Root>& letters);

/// A-set straight from its definition: all 2^l subsequences. Throws
/// BoundExceeded for words longer than max_letters.
std::map<Weight, std::vector<int>> brute_force_a_set(const RootSystem& rs, const std::vector<Root>& letters,
                                                     const Weight& mu, int max_letters = 20);

// ---------------------------------------------------------------------------
// Weight grids

/// All integral weights with coordinates in [-radius, radius].
std::vector<Weight> integral_box(int rank, int radius);

/// Integral box shifted by `offset` in every coordinate.
std::vector<Weight> shifted_box(int rank, int radius, const Rational& offset);

/// Every coordinate drawn from `values`.
std::vector<Weight> product_grid(int rank, const std::vector<Rational>& values);

/// Integral, half-integral and generic (third/sevenths) coordinates mixed.
std::vector<Weight> pattern_grid(int rank);

/// Denominators in 1..max_den, |value| <= max_abs.
Weight random_weight(std::mt19937_64& rng, int rank, int max_den = 6, int max_abs = 3);

/// Dominant representatives of lambdas from the integral, half- and
/// third-integral grids, deduplicated and sorted.
std::vector<Weight> dominant_lambda_samples(const RootSystem& rs, int radius);

// ---------------------------------------------------------------------------
// Sweep reports

struct SweepReport {
  std::string name;
  std::string system;
  std::size_t cases = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

std::string to_string(const SweepReport& r);

using WordASetFn =
    std::function<ASet(const RootSystem&, const std::vector<Root>&, const Weight&, const IntegralData&)>;

WordASetFn default_word_aset();

/// Recursion vs brute force on every canonical reduced word of W (lambda = rho),
/// plus non-reduced words, over `weights`.
SweepReport check_against_definition(const RootSystem& rs, const std::vector<Weight>& weights,
                                     const WordASetFn& fn = default_word_aset());

/// Every reduced word of every w gives the same A-set.
SweepReport check_word_independence(const RootSystem& rs, const std::vector<Weight>& weights,
                                    const WordASetFn& fn = default_word_aset());

/// A of a concatenation equals the union over the first block.
SweepReport check_concatenation(const RootSystem& rs, const std::vector<Weight>& weights,
                               const WordASetFn& fn = default_word_aset());

/// Certificates replay against the definition.
SweepReport check_certificates(const RootSystem& rs, const std::vector<Weight>& weights,
                               const WordASetFn& fn = default_word_aset());

/// hom_twisted_verma(e, mu1, e, mu2) vs strong linkage over all pairs.
SweepReport check_bgg_equivalence(const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& pairs,
                                  const ASetProvider& provider = default_aset_provider());

std::vector<std::pair<Weight, Weight>> all_pairs(const std::vector<Weight>& weights);

/// 1000-style random pairs: half related by a Weyl element, half independent.
std::vector<std::pair<Weight, Weight>> random_pairs(const RootSystem& rs, std::size_t count, std::uint64_t seed);

/// Self-Hom is nonzero for twisted Verma modules and principal series.
SweepReport check_reflexivity(const RootSystem& rs, const std::vector<Weight>& mus,
                              const std::vector<Weight>& lambdas, int lattice_radius,
                              const ASetProvider& provider = default_aset_provider());

/// Principal-series verdict constant on w1 W_lambda^0 x w2 W_lambda^0 for a dominant lambda.
SweepReport check_stabilizer_invariance(const RootSystem& rs, const Weight& lambda, int lattice_radius,
                                        const ASetProvider& provider = default_aset_provider());

/// Invariance of crit(w1,mu1,w2,mu2) = hom_twisted_verma(w1^{-1}w0, w0 mu1, w2^{-1}w0, w0 mu2)
/// under the rank-one isomorphisms in either slot. `mus` must be W-stable.
SweepReport check_simple_reflection_invariance(const RootSystem& rs, const std::vector<Weight>& mus,
                                               const ASetProvider& provider = default_aset_provider());

/// W-orbit closure of the given weights, sorted.
std::vector<Weight> orbit_closure(const RootSystem& rs, const std::vector<Weight>& seeds);

/// w^{-1} Delta^+ cap Delta_lambda = w'^{-1} Delta_lambda^+ for every w in W.
SweepReport check_reduce_parameters(const RootSystem& rs, const std::vector<Weight>& lambdas);

/// Subsystem closure, simple-system expansion, indecomposability, w_lambda,
/// stabilizer generators and both stabilizer routes.
SweepReport check_integral_structure(const RootSystem& rs, const std::vector<Weight>& lambdas);

/// {w : w lambda - lambda in Q} equals the reflection group of Delta_lambda.
SweepReport check_root_lattice_membership(const RootSystem& rs, const std::vector<Weight>& lambdas);

/// {w : w lambda - lambda in P} equals the reflection group of Delta_lambda.
/// Fails in general: the weight lattice admits extra elements.
SweepReport check_weight_lattice_membership(const RootSystem& rs, const std::vector<Weight>& lambdas);

struct SelfcheckConfig {
  int rank_bound = 3;
  int grid_radius = 2;
  std::uint64_t seed = 20240229;
  std::size_t random_pairs = 200;
};

/// Root systems of rank <= bound used by the sweeps.
std::vector<RootSystemSpec> sweep_systems(int rank_bound);

std::vector<SweepReport> run_selfcheck(const SelfcheckConfig& config,
                                       const std::function<void(const SweepReport&)>& on_report = {});

}  // namespace intertwine::oracle
