#include "intertwine/weyl.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "intertwine/errors.hpp"
#include "linalg.hpp"

namespace intertwine {

std::string to_string(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(word[k]);
  }
  return out;
}

WeylElem::WeylElem(int rank, std::vector<int> matrix, std::uint64_t system, std::optional<Word> word)
    : rank_(rank), matrix_(std::move(matrix)), system_(system), word_(std::move(word)) {}

bool WeylElem::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (entry(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::size_t WeylElemHash::operator()(const WeylElem& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : w.matrix()) h = (h ^ static_cast<std::size_t>(x + 1024)) * 0x100000001b3ULL;
  return h;
}

WeylElem identity(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return WeylElem(n, std::move(m), rs.fingerprint(), Word{});
}

WeylElem reflection(const RootSystem& rs, const Root& beta) {
  const int n = rs.rank();
  const auto& kappa = rs.coroot(beta);
  const Weight b = rs.to_weight(beta);
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i * n + j] = (i == j ? 1 : 0) - static_cast<int>(b[i].numerator()) * kappa[j];
  return WeylElem(n, std::move(m), rs.fingerprint());
}

WeylElem simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) {
    throw DomainError("simple reflection index " + std::to_string(i) + " out of range 1.." +
                      std::to_string(rs.rank()));
  }
  const WeylElem s = reflection(rs, rs.simple_root(i));
  return WeylElem(s.rank(), s.matrix(), s.system(), Word{i});
}

WeylElem from_word(const RootSystem& rs, const Word& word) {
  WeylElem u = identity(rs);
  for (int i : word) u = multiply(u, simple_reflection(rs, i));
  return u;
}

WeylElem multiply(const WeylElem& u, const WeylElem& v) {
  if (u.system() != v.system() || u.rank() != v.rank()) {
    throw DomainError("cannot multiply Weyl elements of different root systems");
  }
  const int n = u.rank();
  std::vector<int> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const int a = u.entry(i, k);
      if (a == 0) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += a * v.entry(k, j);
    }
  std::optional<Word> word;
  if (u.cached_word() && v.cached_word()) {
    word = *u.cached_word();
    word->insert(word->end(), v.cached_word()->begin(), v.cached_word()->end());
  }
  return WeylElem(n, std::move(m), u.system(), std::move(word));
}

WeylElem inverse(const WeylElem& u) {
  const int n = u.rank();
  detail::RationalMatrix a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = u.entry(i, j);
  const auto inv = *detail::inverse(a);
  std::vector<int> m(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i * n + j] = static_cast<int>(inv[i][j].numerator());
  std::optional<Word> word;
  if (u.cached_word()) word = Word(u.cached_word()->rbegin(), u.cached_word()->rend());
  return WeylElem(n, std::move(m), u.system(), std::move(word));
}

Weight act(const WeylElem& u, const Weight& mu) {
  if (mu.rank() != u.rank()) throw DomainError("weight rank does not match the Weyl group");
  const int n = u.rank();
  std::vector<Rational> out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = u.entry(i, j);
      if (a != 0) out[i] += Rational(a) * mu[j];
    }
  return Weight(std::move(out));
}

Root act(const RootSystem& rs, const WeylElem& u, const Root& beta) {
  auto image = rs.root_from_weight(act(u, rs.to_weight(beta)));
  if (!image) throw DomainError("matrix does not permute the roots of " + rs.name());
  return *image;
}

int length(const RootSystem& rs, const WeylElem& u) {
  int count = 0;
  for (const auto& beta : rs.positive_roots())
    if (!rs.is_positive(act(rs, u, beta))) ++count;
  return count;
}

bool is_left_descent(const RootSystem& rs, const WeylElem& u, int i) {
  return !rs.is_positive(act(rs, inverse(u), rs.simple_root(i)));
}

Word canonical_reduced_word(const RootSystem& rs, const WeylElem& u) {
  Word word;
  WeylElem rest = u;
  while (!rest.is_identity()) {
    const WeylElem rest_inv = inverse(rest);
    int pick = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!rs.is_positive(act(rs, rest_inv, rs.simple_root(i)))) {
        pick = i;
        break;
      }
    }
    word.push_back(pick);
    rest = multiply(simple_reflection(rs, pick), rest);
  }
  return word;
}

std::vector<Word> all_reduced_words(const RootSystem& rs, const WeylElem& u, int max_length) {
  const int len = length(rs, u);
  if (len > max_length) {
    throw BoundExceeded("element of length " + std::to_string(len) + " exceeds reduced-word limit " +
                        std::to_string(max_length));
  }
  std::unordered_map<WeylElem, std::vector<Word>, WeylElemHash> memo;
  auto rec = [&](auto&& self, const WeylElem& x) -> const std::vector<Word>& {
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::vector<Word> out;
    if (x.is_identity()) {
      out.push_back(Word{});
    } else {
      for (int i = 1; i <= rs.rank(); ++i) {
        if (!is_left_descent(rs, x, i)) continue;
        for (const auto& tail : self(self, multiply(simple_reflection(rs, i), x))) {
          Word w{i};
          w.insert(w.end(), tail.begin(), tail.end());
          out.push_back(std::move(w));
        }
      }
    }
    return memo.emplace(x, std::move(out)).first->second;
  };
  std::vector<Word> words = rec(rec, u);
  std::sort(words.begin(), words.end());
  return words;
}

WeylElem longest_element(const RootSystem& rs) {
  WeylElem w = identity(rs);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (!is_left_descent(rs, w, i)) {
        w = multiply(simple_reflection(rs, i), w);
        grew = true;
        break;
      }
    }
  }
  return w;
}

bool bruhat_leq(const RootSystem& rs, const WeylElem& u, const WeylElem& v) {
  std::unordered_set<WeylElem, WeylElemHash> subwords{identity(rs)};
  for (int i : canonical_reduced_word(rs, v)) {
    const WeylElem s = simple_reflection(rs, i);
    std::vector<WeylElem> extended;
    extended.reserve(subwords.size());
    for (const auto& x : subwords) extended.push_back(multiply(x, s));
    subwords.insert(extended.begin(), extended.end());
  }
  return subwords.count(u) != 0;
}

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  return (b != 0 && a > SIZE_MAX / b) ? SIZE_MAX : a * b;
}

std::size_t component_order(const SimpleComponent& c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  std::size_t fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact = saturating_mul(fact, k);
  switch (c.type) {
    case CartanType::A: return saturating_mul(fact, n + 1);
    case CartanType::B:
    case CartanType::C: return n >= 64 ? SIZE_MAX : saturating_mul(fact, std::size_t{1} << n);
    case CartanType::D: return n - 1 >= 64 ? SIZE_MAX : saturating_mul(fact, std::size_t{1} << (n - 1));
    case CartanType::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case CartanType::F: return 1152;
    case CartanType::G: return 12;
  }
  return SIZE_MAX;
}

}  // namespace

std::size_t weyl_group_order(const RootSystemSpec& spec) {
  std::size_t order = 1;
  for (const auto& c : spec.components) order = saturating_mul(order, component_order(c));
  return order;
}

std::vector<WeylElem> enumerate_group(const RootSystem& rs, std::size_t bound) {
  // fail fast instead of discovering the overflow element by element
  if (weyl_group_order(rs.spec()) > bound) {
    throw BoundExceeded("Weyl group of " + rs.name() + " has order " + std::to_string(weyl_group_order(rs.spec())) +
                        ", above the enumeration bound " + std::to_string(bound));
  }
  std::vector<WeylElem> simple;
  for (int i = 1; i <= rs.rank(); ++i) simple.push_back(simple_reflection(rs, i));

  // Cayley-graph distance from e equals length, so BFS layers are length strata.
  std::unordered_map<WeylElem, int, WeylElemHash> depth;
  std::vector<WeylElem> order{identity(rs)};
  depth.emplace(order.front(), 0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const WeylElem x = order[head];
    const int d = depth.at(x);
    for (const auto& s : simple) {
      WeylElem y = multiply(x, s);
      if (depth.count(y)) continue;
      if (order.size() >= bound) {
        throw BoundExceeded("Weyl group of " + rs.name() + " exceeds enumeration bound " + std::to_string(bound));
      }
      depth.emplace(y, d + 1);
      order.push_back(std::move(y));
    }
  }
  std::stable_sort(order.begin(), order.end(), [&](const WeylElem& a, const WeylElem& b) {
    const int da = depth.at(a), db = depth.at(b);
    return da != db ? da < db : a < b;
  });
  return order;
}

std::vector<WeylElem> reflection_subgroup(const RootSystem& rs, const std::vector<Root>& generators,
                                          std::size_t bound) {
  std::vector<WeylElem> gens;
  for (const auto& g : generators) gens.push_back(reflection(rs, g));
  std::unordered_set<WeylElem, WeylElemHash> seen{identity(rs)};
  std::vector<WeylElem> order{identity(rs)};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const WeylElem x = order[head];
    for (const auto& s : gens) {
      WeylElem y = multiply(s, x);
      if (seen.count(y)) continue;
      if (order.size() >= bound) throw BoundExceeded("reflection subgroup exceeds bound " + std::to_string(bound));
      seen.insert(y);
      order.push_back(std::move(y));
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace intertwine
