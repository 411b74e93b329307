#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "intertwine/rootsystem.hpp"

namespace intertwine {

/// Word in 1-based simple-reflection indices; empty is the identity.
using Word = std::vector<int>;

std::string to_string(const Word& word);

/// Element of a Weyl group, stored as its integer matrix on the
/// fundamental-weight basis. Equality and ordering use the matrix only; the
/// cached word is a (possibly non-reduced) witness.
class WeylElem {
 public:
  WeylElem(int rank, std::vector<int> matrix, std::uint64_t system, std::optional<Word> word = std::nullopt);

  int rank() const { return rank_; }
  std::uint64_t system() const { return system_; }
  const std::vector<int>& matrix() const { return matrix_; }
  int entry(int row, int col) const { return matrix_[row * rank_ + col]; }
  const std::optional<Word>& cached_word() const { return word_; }

  bool is_identity() const;

  friend bool operator==(const WeylElem& a, const WeylElem& b) {
    return a.system_ == b.system_ && a.matrix_ == b.matrix_;
  }
  friend bool operator<(const WeylElem& a, const WeylElem& b) { return a.matrix_ < b.matrix_; }

 private:
  int rank_;
  std::vector<int> matrix_;
  std::uint64_t system_;
  std::optional<Word> word_;
};

struct WeylElemHash {
  std::size_t operator()(const WeylElem& w) const noexcept;
};

WeylElem identity(const RootSystem& rs);

/// s_i for 1 <= i <= rank; DomainError otherwise.
WeylElem simple_reflection(const RootSystem& rs, int i);

/// s_beta for any root beta.
WeylElem reflection(const RootSystem& rs, const Root& beta);

/// Product of simple reflections, leftmost letter acting last.
WeylElem from_word(const RootSystem& rs, const Word& word);

/// u * v; DomainError when u and v belong to different root systems.
WeylElem multiply(const WeylElem& u, const WeylElem& v);
WeylElem inverse(const WeylElem& u);

Weight act(const WeylElem& u, const Weight& mu);
Root act(const RootSystem& rs, const WeylElem& u, const Root& beta);

/// |{alpha > 0 : u(alpha) < 0}|.
int length(const RootSystem& rs, const WeylElem& u);

/// l(s_i u) < l(u), i.e. u^{-1}(alpha_i) < 0.
bool is_left_descent(const RootSystem& rs, const WeylElem& u, int i);

/// Peels the smallest left descent repeatedly.
Word canonical_reduced_word(const RootSystem& rs, const WeylElem& u);

/// Every reduced word of u, lexicographically sorted. BoundExceeded if l(u) > max_length.
std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElem& u, int max_length = 12);

WeylElem longest_element(const RootSystem& rs);

/// Subword criterion on the canonical reduced word of v.
bool bruhat_leq(const RootSystem& rs, const WeylElem& u, const WeylElem& v);

inline constexpr std::size_t kDefaultGroupBound = 3628800;  // 10!

/// |W| from the classification, saturating at SIZE_MAX.
std::size_t weyl_group_order(const RootSystemSpec& spec);

/// Breadth-first closure under right multiplication by simple reflections,
/// sorted by (length, matrix). Throws BoundExceeded past `bound` elements.
std::vector<WeylElem> enumerate_group(const RootSystem& rs, std::size_t bound = kDefaultGroupBound);

/// Closure of {s_beta : beta in generators}; BoundExceeded past `bound`.
std::vector<WeylElem> reflection_subgroup(const RootSystem& rs, const std::vector<Root>& generators,
                                          std::size_t bound = kDefaultGroupBound);

}  // namespace intertwine
