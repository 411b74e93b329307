#pragma once

#include <utility>
#include <vector>

#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

namespace intertwine {

/// Integral root system of a weight lambda and the data of its Weyl group
/// W_lambda. Elements of W_lambda are ordinary WeylElems.
struct IntegralData {
  Weight lambda;
  /// positive roots beta with <beta^vee, lambda> integral, sorted by coordinates
  std::vector<Root> positive;
  /// simple system of `positive`, sorted lexicographically descending so that
  /// Pi_lambda = Pi reproduces the Bourbaki order
  std::vector<Root> simple;
  std::vector<WeylElem> simple_reflections;
  /// longest element w_lambda
  WeylElem longest;
  /// members of `simple` orthogonal to lambda
  std::vector<Root> stabilizer_generators;
};

IntegralData integral_data(const RootSystem& rs, const Weight& lambda);

bool is_integral_root(const RootSystem& rs, const Weight& lambda, const Root& beta);

/// w lambda - lambda lies in the root lattice. This is the membership test for
/// the reflection group of the integral root system.
bool is_in_W_lambda(const RootSystem& rs, const WeylElem& w, const IntegralData& data);

/// w lambda - lambda lies in the weight lattice P. Contains W_lambda, and can
/// be strictly larger (A1, lambda = 1/2: s lambda - lambda = -omega).
bool shifts_into_weight_lattice(const WeylElem& w, const Weight& lambda);

/// Inversions of w inside the integral positive system. DomainError if w is not in W_lambda.
int integral_length(const RootSystem& rs, const WeylElem& w, const IntegralData& data);

/// k is a 1-based index into data.simple.
bool is_integral_left_descent(const RootSystem& rs, const WeylElem& w, const IntegralData& data, int k);

/// Product of reflections in data.simple, by 1-based index.
WeylElem from_integral_word(const RootSystem& rs, const IntegralData& data, const Word& word);

/// Smallest-descent-first reduced word over Pi_lambda.
Word integral_reduced_word(const RootSystem& rs, const WeylElem& w, const IntegralData& data);

/// All reduced words over Pi_lambda, sorted. BoundExceeded when l_lambda(w) > max_length.
std::vector<Word> all_integral_reduced_words(const RootSystem& rs, const WeylElem& w, const IntegralData& data,
                                             int max_length = 12);

/// Every element of W_lambda, sorted.
std::vector<WeylElem> integral_weyl_group(const RootSystem& rs, const IntegralData& data,
                                          std::size_t bound = kDefaultGroupBound);

/// Subgroup generated by the stabilizer generators.
std::vector<WeylElem> stabilizer_by_generators(const RootSystem& rs, const IntegralData& data,
                                               std::size_t bound = kDefaultGroupBound);

/// Elements of W fixing lambda and lying in W_lambda, found by filtering the whole group.
std::vector<WeylElem> stabilizer_by_filtering(const RootSystem& rs, const IntegralData& data,
                                              std::size_t bound = kDefaultGroupBound);

/// W_lambda^0: generator closure when lambda is dominant, filtering otherwise.
std::vector<WeylElem> stabilizer_elements(const RootSystem& rs, const IntegralData& data,
                                          std::size_t bound = kDefaultGroupBound);

/// w' in W_lambda with w^{-1} Delta^+ cap Delta_lambda = w'^{-1} Delta_lambda^+.
WeylElem reduce_parameters(const RootSystem& rs, const WeylElem& w, const Weight& lambda);

/// (u, u lambda) with u in W_lambda and u lambda dominant.
std::pair<WeylElem, Weight> dominant_representative(const RootSystem& rs, const Weight& lambda);

}  // namespace intertwine
