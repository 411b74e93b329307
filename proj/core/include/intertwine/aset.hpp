#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "intertwine/integral.hpp"
#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

namespace intertwine {

/// Subsequence i_1 < ... < i_r (1-based word positions) realizing an element
/// of an A-set, together with the roots beta_{i_1}, ..., beta_{i_r}.
struct Certificate {
  std::vector<int> positions;
  std::vector<Root> roots;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// A_{(s_1,...,s_l)}(mu): the weights reachable from mu by reflecting in an
/// increasing subsequence of the beta-sequence of the word, each reflection
/// taken where the coroot pairing is a negative integer. The empty
/// subsequence is allowed, so mu is always a member.
struct ASet {
  /// element -> lexicographically smallest realizing subsequence
  std::map<Weight, Certificate> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(const Weight& mu) const { return elements.count(mu) != 0; }
  std::vector<Weight> weights() const;

  /// Same weights, certificates ignored.
  bool same_elements(const ASet& other) const;
};

/// beta_i = s_{alpha_1} ... s_{alpha_{i-1}} (alpha_i).
std::vector<Root> beta_sequence(const RootSystem& rs, const std::vector<Root>& letters);

/// A-set of the word whose letters are reflections in `letters`, which must
/// all lie in ctx.simple (DomainError otherwise). Left-peeling recursion
///   A_{(s, rest)}(mu) = s A_rest(s mu)  u  [<a^vee, mu> in Z_{<0}] s A_rest(mu)
/// memoized on (suffix, weight) for the duration of the call.
ASet a_set_word(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu, const IntegralData& ctx);

/// Letters of a word over Pi_lambda given by 1-based indices into ctx.simple.
std::vector<Root> letters_of(const IntegralData& ctx, const Word& word);

/// A_w(mu) on the canonical reduced word of w over Pi_lambda. DomainError if w is not in W_lambda.
ASet a_set(const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx);

/// One A-set per reduced word of w over Pi_lambda, in the order of all_integral_reduced_words.
std::vector<ASet> a_set_all_words(const RootSystem& rs, const WeylElem& w, const Weight& mu,
                                  const IntegralData& ctx, int max_length = 12);

/// Replays a certificate against the definition; returns the reached weight
/// when every step has a negative-integer pairing and the positions increase.
std::optional<Weight> replay_certificate(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu,
                                         const Certificate& cert);

/// Source of A_w(mu) used by the decision procedures; swapped out for caching
/// and for mutation tests.
using ASetProvider = std::function<ASet(const RootSystem&, const WeylElem&, const Weight&, const IntegralData&)>;

ASetProvider default_aset_provider();

}  // namespace intertwine
