#include "intertwine/integral.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "intertwine/errors.hpp"

namespace intertwine {

namespace {

Root difference(const Root& a, const Root& b) {
  Root r{a.coords};
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

}  // namespace

bool is_integral_root(const RootSystem& rs, const Weight& lambda, const Root& beta) {
  return is_integer(rs.pairing(beta, lambda));
}

IntegralData integral_data(const RootSystem& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw DomainError("weight rank does not match " + rs.name());
  IntegralData data{lambda, {}, {}, {}, identity(rs), {}};
  for (const auto& beta : rs.positive_roots())
    if (is_integral_root(rs, lambda, beta)) data.positive.push_back(beta);

  // `positive` is kept sorted by coordinates for lookup.
  std::vector<Root> sorted = data.positive;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& beta : sorted) {
    bool decomposable = false;
    for (const auto& gamma : sorted) {
      if (std::binary_search(sorted.begin(), sorted.end(), difference(beta, gamma))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) data.simple.push_back(beta);
  }
  data.positive = std::move(sorted);
  std::sort(data.simple.begin(), data.simple.end(), [](const Root& a, const Root& b) { return b < a; });

  for (const auto& alpha : data.simple) {
    data.simple_reflections.push_back(reflection(rs, alpha));
    if (rs.pairing(alpha, lambda).numerator() == 0) data.stabilizer_generators.push_back(alpha);
  }

  // Greedy ascent inside W_lambda ends at the longest element.
  WeylElem w = identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 1; k <= static_cast<int>(data.simple.size()); ++k) {
      if (!is_integral_left_descent(rs, w, data, k)) {
        w = multiply(data.simple_reflections[k - 1], w);
        grew = true;
        break;
      }
    }
  }
  data.longest = w;
  return data;
}

bool is_in_W_lambda(const RootSystem& rs, const WeylElem& w, const IntegralData& data) {
  return rs.in_root_lattice(act(w, data.lambda) - data.lambda);
}

bool shifts_into_weight_lattice(const WeylElem& w, const Weight& lambda) {
  return (act(w, lambda) - lambda).is_integral();
}

int integral_length(const RootSystem& rs, const WeylElem& w, const IntegralData& data) {
  if (!is_in_W_lambda(rs, w, data)) throw DomainError("element is not in the integral Weyl group W_lambda");
  int count = 0;
  for (const auto& beta : data.positive)
    if (!rs.is_positive(act(rs, w, beta))) ++count;
  return count;
}

bool is_integral_left_descent(const RootSystem& rs, const WeylElem& w, const IntegralData& data, int k) {
  return !rs.is_positive(act(rs, inverse(w), data.simple.at(k - 1)));
}

WeylElem from_integral_word(const RootSystem& rs, const IntegralData& data, const Word& word) {
  WeylElem u = identity(rs);
  for (int k : word) {
    if (k < 1 || k > static_cast<int>(data.simple.size())) {
      throw DomainError("letter " + std::to_string(k) + " is not an index into Pi_lambda");
    }
    u = multiply(u, data.simple_reflections[k - 1]);
  }
  return u;
}

Word integral_reduced_word(const RootSystem& rs, const WeylElem& w, const IntegralData& data) {
  if (!is_in_W_lambda(rs, w, data)) throw DomainError("element is not in the integral Weyl group W_lambda");
  Word word;
  WeylElem rest = w;
  while (!rest.is_identity()) {
    const WeylElem rest_inv = inverse(rest);
    int pick = 0;
    for (int k = 1; k <= static_cast<int>(data.simple.size()); ++k) {
      if (!rs.is_positive(act(rs, rest_inv, data.simple[k - 1]))) {
        pick = k;
        break;
      }
    }
    if (pick == 0) throw DomainError("element is not in the integral Weyl group W_lambda");
    word.push_back(pick);
    rest = multiply(data.simple_reflections[pick - 1], rest);
  }
  return word;
}

std::vector<Word> all_integral_reduced_words(const RootSystem& rs, const WeylElem& w, const IntegralData& data,
                                             int max_length) {
  const int len = integral_length(rs, w, data);
  if (len > max_length) {
    throw BoundExceeded("integral length " + std::to_string(len) + " exceeds reduced-word limit " +
                        std::to_string(max_length));
  }
  std::unordered_map<WeylElem, std::vector<Word>, WeylElemHash> memo;
  auto rec = [&](auto&& self, const WeylElem& x) -> const std::vector<Word>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (x.is_identity()) {
      out.push_back(Word{});
    } else {
      for (int k = 1; k <= static_cast<int>(data.simple.size()); ++k) {
        if (!is_integral_left_descent(rs, x, data, k)) continue;
        for (const auto& tail : self(self, multiply(data.simple_reflections[k - 1], x))) {
          Word word{k};
          word.insert(word.end(), tail.begin(), tail.end());
          out.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  std::vector<Word> words = rec(rec, w);
  std::sort(words.begin(), words.end());
  return words;
}

std::vector<WeylElem> integral_weyl_group(const RootSystem& rs, const IntegralData& data, std::size_t bound) {
  return reflection_subgroup(rs, data.simple, bound);
}

std::vector<WeylElem> stabilizer_by_generators(const RootSystem& rs, const IntegralData& data,
                                               std::size_t bound) {
  return reflection_subgroup(rs, data.stabilizer_generators, bound);
}

std::vector<WeylElem> stabilizer_by_filtering(const RootSystem& rs, const IntegralData& data,
                                              std::size_t bound) {
  std::vector<WeylElem> out;
  for (const auto& w : enumerate_group(rs, bound))
    if (act(w, data.lambda) == data.lambda && is_in_W_lambda(rs, w, data)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElem> stabilizer_elements(const RootSystem& rs, const IntegralData& data, std::size_t bound) {
  if (rs.is_dominant(data.lambda)) return stabilizer_by_generators(rs, data, bound);
  return stabilizer_by_filtering(rs, data, bound);
}

WeylElem reduce_parameters(const RootSystem& rs, const WeylElem& w, const Weight& lambda) {
  const IntegralData data = integral_data(rs, lambda);
  // Target positive system P = {gamma in Delta_lambda : w gamma > 0}. Grow x in
  // W_lambda until x Delta_lambda^+ = P; each step flips one root of x Pi_lambda.
  WeylElem x = identity(rs);
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k < data.simple.size(); ++k) {
      const Root image = act(rs, x, data.simple[k]);
      if (!rs.is_positive(act(rs, w, image))) {
        x = multiply(x, data.simple_reflections[k]);
        moved = true;
        break;
      }
    }
  }
  return inverse(x);
}

std::pair<WeylElem, Weight> dominant_representative(const RootSystem& rs, const Weight& lambda) {
  const IntegralData data = integral_data(rs, lambda);
  WeylElem u = identity(rs);
  Weight mu = lambda;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t k = 0; k < data.simple.size(); ++k) {
      if (rs.pairing(data.simple[k], mu) < 0) {
        mu = rs.reflect(data.simple[k], mu);
        u = multiply(data.simple_reflections[k], u);
        moved = true;
        break;
      }
    }
  }
  return {u, mu};
}

}  // namespace intertwine
