#include "intertwine/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

#include "intertwine/errors.hpp"
#include "linalg.hpp"

namespace intertwine::oracle {

using intertwine::to_string;

// ---------------------------------------------------------------------------
// Strong linkage

namespace {

struct Parent {
  Weight from;
  Root root;
};

}  // namespace

LinkageResult bgg_verma_hom(const RootSystem& rs, const Weight& mu1, const Weight& mu2) {
  std::map<Weight, std::optional<Parent>> seen;
  seen.emplace(mu2, std::nullopt);
  std::deque<Weight> queue{mu2};
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    if (cur == mu1) break;
    for (const auto& beta : rs.positive_roots()) {
      if (!is_positive_integer(rs.pairing(beta, cur))) continue;
      Weight next = rs.reflect(beta, cur);
      if (seen.count(next)) continue;
      seen.emplace(next, Parent{cur, beta});
      queue.push_back(std::move(next));
    }
  }
  if (!seen.count(mu1)) return {};

  LinkageChain chain{mu2, {}};
  for (Weight at = mu1; seen.at(at).has_value();) {
    const Parent& p = *seen.at(at);
    chain.steps.push_back({p.root, at});
    at = p.from;
  }
  std::reverse(chain.steps.begin(), chain.steps.end());
  return {true, std::move(chain)};
}

std::vector<Weight> strongly_linked_below(const RootSystem& rs, const Weight& mu) {
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    for (const auto& beta : rs.positive_roots()) {
      if (!is_positive_integer(rs.pairing(beta, cur))) continue;
      Weight next = rs.reflect(beta, cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

bool validate_chain(const RootSystem& rs, const LinkageChain& chain) {
  Weight cur = chain.start;
  for (const auto& step : chain.steps) {
    if (!rs.is_positive(step.root)) return false;
    const Rational p = rs.pairing(step.root, cur);
    if (!is_positive_integer(p)) return false;
    const Weight next = rs.reflect(step.root, cur);
    if (!(next == step.result)) return false;
    // cur - next = p * beta with p > 0: strictly lower in the dominance order.
    for (const auto& c : rs.to_root_coords(cur - next))
      if (!is_integer(c) || c < 0) return false;
    cur = next;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute force

std::vector<Root> beta_sequence_by_reflection(const RootSystem& rs, const std::vector<Root>& letters) {
  std::vector<Root> betas;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Weight v = rs.to_weight(letters[i]);
    for (std::size_t j = i; j-- > 0;) v = rs.reflect(letters[j], v);
    betas.push_back(*rs.root_from_weight(v));
  }
  return betas;
}

std::map<Weight, std::vector<int>> brute_force_a_set(const RootSystem& rs, const std::vector<Root>& letters,
                                                     const Weight& mu, int max_letters) {
  const int l = static_cast<int>(letters.size());
  if (l > max_letters) throw BoundExceeded("brute force limited to " + std::to_string(max_letters) + " letters");
  const std::vector<Root> betas = beta_sequence_by_reflection(rs, letters);
  std::map<Weight, std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
    Weight cur = mu;
    std::vector<int> positions;
    bool admissible = true;
    for (int i = 0; i < l && admissible; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!is_negative_integer(rs.pairing(betas[i], cur))) {
        admissible = false;
        break;
      }
      cur = rs.reflect(betas[i], cur);
      positions.push_back(i + 1);
    }
    if (!admissible) continue;
    auto [it, fresh] = out.emplace(cur, positions);
    if (!fresh && positions < it->second) it->second = positions;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grids

std::vector<Weight> product_grid(int rank, const std::vector<Rational>& values) {
  std::vector<Weight> out;
  std::vector<std::size_t> idx(rank, 0);
  while (true) {
    std::vector<Rational> c(rank);
    for (int i = 0; i < rank; ++i) c[i] = values[idx[i]];
    out.emplace_back(std::move(c));
    int k = rank - 1;
    while (k >= 0 && ++idx[k] == values.size()) idx[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> integral_box(int rank, int radius) {
  std::vector<Rational> values;
  for (int v = -radius; v <= radius; ++v) values.emplace_back(v);
  return product_grid(rank, values);
}

std::vector<Weight> shifted_box(int rank, int radius, const Rational& offset) {
  std::vector<Rational> values;
  for (int v = -radius; v <= radius; ++v) values.push_back(Rational(v) + offset);
  return product_grid(rank, values);
}

std::vector<Weight> pattern_grid(int rank) {
  return product_grid(rank, {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 3), Rational(1, 2),
                             Rational(1), Rational(2)});
}

Weight random_weight(std::mt19937_64& rng, int rank, int max_den, int max_abs) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  std::vector<Rational> c(rank);
  for (auto& q : c) {
    const int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(-max_abs * den, max_abs * den);
    q = Rational(num_dist(rng), den);
  }
  return Weight(std::move(c));
}

std::vector<Weight> dominant_lambda_samples(const RootSystem& rs, int radius) {
  std::set<Weight> out;
  auto add_all = [&](const std::vector<Weight>& grid) {
    for (const auto& w : grid) out.insert(dominant_representative(rs, w).second);
  };
  add_all(integral_box(rs.rank(), radius));
  add_all(shifted_box(rs.rank(), std::max(0, radius - 1), Rational(1, 2)));
  add_all(shifted_box(rs.rank(), std::max(0, radius - 1), Rational(1, 3)));
  add_all(product_grid(rs.rank(), {Rational(0), Rational(1, 2), Rational(1, 3), Rational(1)}));
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Reports

std::string to_string(const SweepReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.system << "): " << r.cases << " cases";
  if (r.counterexample) os << "; counterexample: " << *r.counterexample;
  return os.str();
}

WordASetFn default_word_aset() {
  return [](const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu, const IntegralData& ctx) {
    return a_set_word(rs, letters, mu, ctx);
  };
}

namespace {

std::string describe(const std::vector<Weight>& ws) {
  std::string out = "{";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ws[i]);
  }
  return out + "}";
}

std::string describe_letters(const std::vector<Root>& letters) {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ", ";
    out += to_string(letters[i]);
  }
  return out + "]";
}

std::vector<Root> simple_letters(const RootSystem& rs, const Word& word) {
  std::vector<Root> letters;
  for (int i : word) letters.push_back(rs.simple_root(i));
  return letters;
}

// All words of length <= max_len over the simple reflections; not necessarily reduced.
std::vector<Word> short_words(int rank, int max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 1; i <= rank; ++i) {
        Word x = w;
        x.push_back(i);
        next.push_back(std::move(x));
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

SweepReport make_report(std::string name, const RootSystem& rs) { return SweepReport{std::move(name), rs.name(), 0, {}}; }

// Contexts for word-level sweeps: rho plus a few dominant lambdas with a proper integral subsystem.
std::vector<IntegralData> word_contexts(const RootSystem& rs) {
  std::vector<IntegralData> out{integral_data(rs, rs.rho())};
  std::set<std::vector<Root>> simple_systems{out.front().simple};
  for (const auto& lambda : dominant_lambda_samples(rs, 1)) {
    IntegralData ctx = integral_data(rs, lambda);
    if (ctx.simple.empty() || !simple_systems.insert(ctx.simple).second) continue;
    out.push_back(std::move(ctx));
    if (out.size() >= 4) break;
  }
  return out;
}

}  // namespace

SweepReport check_against_definition(const RootSystem& rs, const std::vector<Weight>& weights, const WordASetFn& fn) {
  SweepReport report = make_report("A-set recursion vs subsequence definition", rs);
  const IntegralData ctx = integral_data(rs, rs.rho());
  std::vector<Word> words;
  for (const auto& w : enumerate_group(rs)) words.push_back(canonical_reduced_word(rs, w));
  for (auto& w : short_words(rs.rank(), rs.rank() <= 2 ? 5 : 3)) words.push_back(std::move(w));

  for (const auto& word : words) {
    const auto letters = simple_letters(rs, word);
    for (const auto& mu : weights) {
      ++report.cases;
      const ASet got = fn(rs, letters, mu, ctx);
      const auto expected = brute_force_a_set(rs, letters, mu);
      bool same = got.size() == expected.size();
      if (same) {
        auto it = expected.begin();
        for (const auto& [nu, cert] : got.elements) {
          if (!(nu == it->first) || cert.positions != it->second) {
            same = false;
            break;
          }
          ++it;
        }
      }
      if (!same) {
        std::vector<Weight> exp_w;
        for (const auto& [nu, pos] : expected) exp_w.push_back(nu);
        report.counterexample = "word " + to_string(word) + ", mu " + to_string(mu) + ": recursion " +
                                describe(got.weights()) + " vs definition " + describe(exp_w);
        return report;
      }
    }
  }
  return report;
}

SweepReport check_word_independence(const RootSystem& rs, const std::vector<Weight>& weights, const WordASetFn& fn) {
  SweepReport report = make_report("reduced-word independence", rs);
  for (const auto& ctx : word_contexts(rs)) {
    for (const auto& w : integral_weyl_group(rs, ctx)) {
      const auto words = all_integral_reduced_words(rs, w, ctx, 64);
      for (const auto& mu : weights) {
        ++report.cases;
        const ASet first = fn(rs, letters_of(ctx, words.front()), mu, ctx);
        for (std::size_t k = 1; k < words.size(); ++k) {
          const ASet other = fn(rs, letters_of(ctx, words[k]), mu, ctx);
          if (!first.same_elements(other)) {
            report.counterexample = "lambda " + to_string(ctx.lambda) + ", mu " + to_string(mu) + ": word " +
                                    describe_letters(letters_of(ctx, words.front())) + " gives " +
                                    describe(first.weights()) + " but " +
                                    describe_letters(letters_of(ctx, words[k])) + " gives " +
                                    describe(other.weights());
            return report;
          }
        }
      }
    }
  }
  return report;
}

SweepReport check_concatenation(const RootSystem& rs, const std::vector<Weight>& weights, const WordASetFn& fn) {
  SweepReport report = make_report("concatenation identity", rs);
  for (const auto& ctx : word_contexts(rs)) {
    for (const auto& w : integral_weyl_group(rs, ctx)) {
      const auto letters = letters_of(ctx, integral_reduced_word(rs, w, ctx));
      for (const auto& mu : weights) {
        const ASet whole = fn(rs, letters, mu, ctx);
        for (std::size_t split = 0; split <= letters.size(); ++split) {
          ++report.cases;
          const std::vector<Root> head(letters.begin(), letters.begin() + split);
          const std::vector<Root> tail(letters.begin() + split, letters.end());
          WeylElem u = identity(rs);
          for (const auto& a : head) u = multiply(u, reflection(rs, a));
          const WeylElem u_inv = inverse(u);
          std::set<Weight> joined;
          for (const auto& nu : fn(rs, head, mu, ctx).weights())
            for (const auto& x : fn(rs, tail, act(u_inv, nu), ctx).weights()) joined.insert(act(u, x));
          const std::vector<Weight> rhs(joined.begin(), joined.end());
          if (whole.weights() != rhs) {
            report.counterexample = "lambda " + to_string(ctx.lambda) + ", word " + describe_letters(letters) +
                                    " split at " + std::to_string(split) + ", mu " + to_string(mu) + ": " +
                                    describe(whole.weights()) + " vs " + describe(rhs);
            return report;
          }
        }
      }
    }
  }
  return report;
}

SweepReport check_certificates(const RootSystem& rs, const std::vector<Weight>& weights, const WordASetFn& fn) {
  SweepReport report = make_report("certificate replay", rs);
  for (const auto& ctx : word_contexts(rs)) {
    for (const auto& w : integral_weyl_group(rs, ctx)) {
      const auto letters = letters_of(ctx, integral_reduced_word(rs, w, ctx));
      for (const auto& mu : weights) {
        const ASet set = fn(rs, letters, mu, ctx);
        if (!set.contains(mu)) {
          report.counterexample = "mu " + to_string(mu) + " missing from its own A-set";
          return report;
        }
        for (const auto& [nu, cert] : set.elements) {
          ++report.cases;
          const auto replay = replay_certificate(rs, letters, mu, cert);
          if (!replay || !(*replay == nu)) {
            report.counterexample = "certificate for " + to_string(nu) + " from " + to_string(mu) + " over " +
                                    describe_letters(letters) + " does not replay";
            return report;
          }
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<Weight, Weight>> all_pairs(const std::vector<Weight>& weights) {
  std::vector<std::pair<Weight, Weight>> out;
  out.reserve(weights.size() * weights.size());
  for (const auto& a : weights)
    for (const auto& b : weights) out.emplace_back(a, b);
  return out;
}

std::vector<std::pair<Weight, Weight>> random_pairs(const RootSystem& rs, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto group = enumerate_group(rs);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  std::vector<std::pair<Weight, Weight>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Weight mu2 = random_weight(rng, rs.rank(), 3, 2);
    Weight mu1 = (k % 2 == 0) ? act(group[pick(rng)], mu2) : random_weight(rng, rs.rank(), 3, 2);
    out.emplace_back(std::move(mu1), std::move(mu2));
  }
  return out;
}

SweepReport check_bgg_equivalence(const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& pairs,
                                  const ASetProvider& provider) {
  SweepReport report = make_report("twisted Verma criterion vs strong linkage", rs);
  const WeylElem e = identity(rs);
  for (const auto& [mu1, mu2] : pairs) {
    ++report.cases;
    const bool criterion = hom_twisted_verma(rs, {e, mu1, e, mu2}, provider).hom_nonzero;
    const LinkageResult linkage = bgg_verma_hom(rs, mu1, mu2);
    if (criterion != linkage.linked) {
      report.counterexample = "mu1 " + to_string(mu1) + ", mu2 " + to_string(mu2) + ": criterion " +
                              (criterion ? "true" : "false") + ", linkage " + (linkage.linked ? "true" : "false");
      return report;
    }
    if (linkage.linked && !validate_chain(rs, *linkage.chain)) {
      report.counterexample = "invalid linkage chain from " + to_string(mu2) + " to " + to_string(mu1);
      return report;
    }
  }
  return report;
}

SweepReport check_reflexivity(const RootSystem& rs, const std::vector<Weight>& mus, const std::vector<Weight>& lambdas,
                              int lattice_radius, const ASetProvider& provider) {
  SweepReport report = make_report("self-Hom is nonzero", rs);
  for (const auto& w : enumerate_group(rs)) {
    for (const auto& mu : mus) {
      ++report.cases;
      if (!hom_twisted_verma(rs, {w, mu, w, mu}, provider).hom_nonzero) {
        report.counterexample = "twisted Verma w = " + to_string(canonical_reduced_word(rs, w)) + ", mu " +
                                to_string(mu);
        return report;
      }
    }
  }
  const auto box = integral_box(rs.rank(), lattice_radius);
  for (const auto& lambda : lambdas) {
    const IntegralData ctx = integral_data(rs, lambda);
    for (const auto& w : integral_weyl_group(rs, ctx)) {
      for (const auto& shift : box) {
        ++report.cases;
        const Weight mu = lambda + shift;
        if (!hom_principal_series(rs, {lambda, w, mu, w, mu}, provider).hom_nonzero) {
          report.counterexample = "principal series lambda " + to_string(lambda) + ", w = " +
                                  to_string(canonical_reduced_word(rs, w)) + ", mu " + to_string(mu);
          return report;
        }
      }
    }
  }
  return report;
}

SweepReport check_stabilizer_invariance(const RootSystem& rs, const Weight& lambda, int lattice_radius,
                                        const ASetProvider& provider) {
  SweepReport report = make_report("W_lambda^0-invariance of the principal-series criterion", rs);
  report.name += " at lambda " + to_string(lambda);
  const IntegralData ctx = integral_data(rs, lambda);
  const auto group = integral_weyl_group(rs, ctx);
  const auto stab = stabilizer_elements(rs, ctx);
  std::unordered_map<WeylElem, std::size_t, WeylElemHash> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);

  std::vector<Weight> mus;
  for (const auto& shift : integral_box(rs.rank(), lattice_radius)) mus.push_back(lambda + shift);

  const std::size_t G = group.size(), M = mus.size();
  auto at = [&](std::size_t i1, std::size_t m1, std::size_t i2, std::size_t m2) {
    return ((i1 * M + m1) * G + i2) * M + m2;
  };
  std::vector<char> table(G * M * G * M);
  for (std::size_t i1 = 0; i1 < G; ++i1)
    for (std::size_t m1 = 0; m1 < M; ++m1)
      for (std::size_t i2 = 0; i2 < G; ++i2)
        for (std::size_t m2 = 0; m2 < M; ++m2)
          table[at(i1, m1, i2, m2)] =
              hom_principal_series(rs, {lambda, group[i1], mus[m1], group[i2], mus[m2]}, provider).hom_nonzero;

  std::vector<std::vector<std::size_t>> right_mult(G);
  for (std::size_t i = 0; i < G; ++i)
    for (const auto& u : stab) right_mult[i].push_back(index.at(multiply(group[i], u)));

  for (std::size_t i1 = 0; i1 < G; ++i1)
    for (std::size_t m1 = 0; m1 < M; ++m1)
      for (std::size_t i2 = 0; i2 < G; ++i2)
        for (std::size_t m2 = 0; m2 < M; ++m2) {
          const char base = table[at(i1, m1, i2, m2)];
          for (std::size_t a = 0; a < stab.size(); ++a)
            for (std::size_t b = 0; b < stab.size(); ++b) {
              ++report.cases;
              if (table[at(right_mult[i1][a], m1, right_mult[i2][b], m2)] != base) {
                report.counterexample = "w1 = " + to_string(canonical_reduced_word(rs, group[i1])) + ", mu1 " +
                                        to_string(mus[m1]) + ", w2 = " +
                                        to_string(canonical_reduced_word(rs, group[i2])) + ", mu2 " +
                                        to_string(mus[m2]) + " changes under the stabilizer";
                return report;
              }
            }
        }
  return report;
}

std::vector<Weight> orbit_closure(const RootSystem& rs, const std::vector<Weight>& seeds) {
  std::set<Weight> seen(seeds.begin(), seeds.end());
  std::deque<Weight> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    const Weight cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight next = rs.reflect(rs.simple_root(i), cur);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

SweepReport check_simple_reflection_invariance(const RootSystem& rs, const std::vector<Weight>& mus,
                                               const ASetProvider& provider) {
  SweepReport report = make_report("rank-one isomorphism invariance of the twisted Verma criterion", rs);
  const auto group = enumerate_group(rs);
  const WeylElem w0 = longest_element(rs);
  std::unordered_map<WeylElem, std::size_t, WeylElemHash> gindex;
  for (std::size_t i = 0; i < group.size(); ++i) gindex.emplace(group[i], i);
  std::map<Weight, std::size_t> mindex;
  for (std::size_t i = 0; i < mus.size(); ++i) mindex.emplace(mus[i], i);

  // Orbit label per weight: pairs from different orbits are trivially unrelated.
  std::map<Weight, Weight> orbit_label;
  for (const auto& mu : mus) orbit_label.emplace(mu, orbit_closure(rs, {mu}).front());

  std::map<std::array<std::size_t, 4>, bool> memo;
  auto crit = [&](std::size_t w1, std::size_t m1, std::size_t w2, std::size_t m2) {
    const std::array<std::size_t, 4> key{w1, m1, w2, m2};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const TwistedVermaQuery q{multiply(inverse(group[w1]), w0), act(w0, mus[m1]), multiply(inverse(group[w2]), w0),
                              act(w0, mus[m2])};
    const bool v = hom_twisted_verma(rs, q, provider).hom_nonzero;
    memo.emplace(key, v);
    return v;
  };
  auto label = [&](std::size_t w1, std::size_t m1, std::size_t w2, std::size_t m2) {
    return "(w1 = " + to_string(canonical_reduced_word(rs, group[w1])) + ", mu1 " + to_string(mus[m1]) +
           ", w2 = " + to_string(canonical_reduced_word(rs, group[w2])) + ", mu2 " + to_string(mus[m2]) + ")";
  };

  std::vector<WeylElem> simple;
  for (int i = 1; i <= rs.rank(); ++i) simple.push_back(simple_reflection(rs, i));

  for (std::size_t w1 = 0; w1 < group.size(); ++w1)
    for (std::size_t w2 = 0; w2 < group.size(); ++w2)
      for (std::size_t m1 = 0; m1 < mus.size(); ++m1)
        for (std::size_t m2 = 0; m2 < mus.size(); ++m2) {
          if (!(orbit_label.at(mus[m1]) == orbit_label.at(mus[m2]))) continue;
          for (int i = 1; i <= rs.rank(); ++i) {
            const Root alpha = rs.simple_root(i);
            // second slot: s w2 > w2 and <alpha^vee, mu2> not a negative integer
            if (!is_left_descent(rs, group[w2], i) && !is_negative_integer(rs.pairing(alpha, mus[m2]))) {
              ++report.cases;
              const std::size_t sw2 = gindex.at(multiply(simple[i - 1], group[w2]));
              const std::size_t sm2 = mindex.at(rs.reflect(alpha, mus[m2]));
              if (crit(w1, m1, sw2, m2) != crit(w1, m1, w2, sm2)) {
                report.counterexample = "second slot, s" + std::to_string(i) + " at " + label(w1, m1, w2, m2);
                return report;
              }
            }
            // first slot: s w1 > w1 and <alpha^vee, mu1> not a positive integer
            if (!is_left_descent(rs, group[w1], i) && !is_positive_integer(rs.pairing(alpha, mus[m1]))) {
              ++report.cases;
              const std::size_t sw1 = gindex.at(multiply(simple[i - 1], group[w1]));
              const std::size_t sm1 = mindex.at(rs.reflect(alpha, mus[m1]));
              if (crit(w1, m1, w2, m2) != crit(sw1, sm1, w2, m2)) {
                report.counterexample = "first slot, s" + std::to_string(i) + " at " + label(w1, m1, w2, m2);
                return report;
              }
            }
          }
        }
  return report;
}

SweepReport check_reduce_parameters(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  SweepReport report = make_report("parameter reduction postcondition", rs);
  const auto group = enumerate_group(rs);
  for (const auto& lambda : lambdas) {
    const IntegralData ctx = integral_data(rs, lambda);
    std::vector<Root> delta = ctx.positive;
    for (const auto& r : ctx.positive) {
      Root neg = r;
      for (auto& c : neg.coords) c = -c;
      delta.push_back(neg);
    }
    for (const auto& w : group) {
      ++report.cases;
      const WeylElem wp = reduce_parameters(rs, w, lambda);
      std::set<Root> lhs, rhs;
      for (const auto& g : delta)
        if (rs.is_positive(act(rs, w, g))) lhs.insert(g);
      const WeylElem wp_inv = inverse(wp);
      for (const auto& b : ctx.positive) rhs.insert(act(rs, wp_inv, b));
      bool ok = is_in_W_lambda(rs, wp, ctx) && lhs == rhs;
      // Delta^+ cap (w' w^{-1})^{-1} Delta^- cap w Delta_lambda is empty.
      const WeylElem g = multiply(wp, inverse(w));
      const WeylElem w_inv = inverse(w);
      for (const auto& a : rs.positive_roots()) {
        if (!ok) break;
        if (!is_integral_root(rs, lambda, act(rs, w_inv, a))) continue;
        if (!rs.is_positive(act(rs, g, a))) ok = false;
      }
      if (!ok) {
        report.counterexample = "lambda " + to_string(lambda) + ", w = " + to_string(canonical_reduced_word(rs, w));
        return report;
      }
    }
  }
  return report;
}

SweepReport check_integral_structure(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  SweepReport report = make_report("integral root system structure", rs);
  auto fail = [&](const Weight& lambda, const std::string& what) {
    report.counterexample = "lambda " + to_string(lambda) + ": " + what;
  };
  for (const auto& lambda : lambdas) {
    ++report.cases;
    const IntegralData ctx = integral_data(rs, lambda);
    std::vector<Root> delta = ctx.positive;
    for (const auto& r : ctx.positive) {
      Root neg = r;
      for (auto& c : neg.coords) c = -c;
      delta.push_back(neg);
    }
    std::set<Root> delta_set(delta.begin(), delta.end());

    for (const auto& a : delta)
      for (const auto& b : delta) {
        auto image = rs.root_from_weight(rs.reflect(a, rs.to_weight(b)));
        if (!image || !delta_set.count(*image)) {
          fail(lambda, "Delta_lambda not closed under s_" + to_string(a));
          return report;
        }
      }

    detail::RationalMatrix rows;
    for (const auto& a : ctx.simple) rows.emplace_back(a.coords.begin(), a.coords.end());
    if (detail::rank(rows) != static_cast<int>(ctx.simple.size())) {
      fail(lambda, "Pi_lambda is linearly dependent");
      return report;
    }
    for (const auto& b : ctx.positive) {
      const auto coeffs = detail::express_in_basis(rows, {b.coords.begin(), b.coords.end()});
      const bool ok = coeffs && std::all_of(coeffs->begin(), coeffs->end(),
                                            [](const Rational& c) { return is_integer(c) && c >= 0; });
      if (!ok) {
        fail(lambda, to_string(b) + " is not a nonnegative integral combination of Pi_lambda");
        return report;
      }
    }
    for (const auto& a : ctx.simple)
      for (const auto& b : ctx.positive) {
        Root rest = a;
        for (std::size_t i = 0; i < rest.coords.size(); ++i) rest.coords[i] -= b.coords[i];
        if (std::binary_search(ctx.positive.begin(), ctx.positive.end(), rest)) {
          fail(lambda, to_string(a) + " in Pi_lambda is decomposable");
          return report;
        }
      }

    for (const auto& b : ctx.positive) {
      const Root image = act(rs, ctx.longest, b);
      Root neg = image;
      for (auto& c : neg.coords) c = -c;
      if (rs.is_positive(image) || !std::binary_search(ctx.positive.begin(), ctx.positive.end(), neg)) {
        fail(lambda, "w_lambda does not send Delta_lambda^+ to its negative");
        return report;
      }
    }
    if (integral_length(rs, ctx.longest, ctx) != static_cast<int>(ctx.positive.size())) {
      fail(lambda, "l_lambda(w_lambda) != |Delta_lambda^+|");
      return report;
    }
    for (const auto& a : ctx.stabilizer_generators) {
      if (!(rs.reflect(a, lambda) == lambda)) {
        fail(lambda, "stabilizer generator " + to_string(a) + " moves lambda");
        return report;
      }
    }
    if (rs.is_dominant(lambda) && stabilizer_by_generators(rs, ctx) != stabilizer_by_filtering(rs, ctx)) {
      fail(lambda, "stabilizer generated by Pi_lambda^0 differs from the filtered stabilizer");
      return report;
    }
  }
  return report;
}

namespace {

SweepReport check_membership(const RootSystem& rs, const std::vector<Weight>& lambdas, std::string name,
                             const std::function<bool(const WeylElem&, const IntegralData&)>& member) {
  SweepReport report = make_report(std::move(name), rs);
  const auto group = enumerate_group(rs);
  for (const auto& lambda : lambdas) {
    const IntegralData ctx = integral_data(rs, lambda);
    const auto generated = reflection_subgroup(rs, ctx.positive);
    std::vector<WeylElem> selected;
    for (const auto& w : group) {
      ++report.cases;
      if (member(w, ctx)) selected.push_back(w);
    }
    std::sort(selected.begin(), selected.end());
    if (selected != generated) {
      std::string extra;
      for (const auto& w : selected) {
        if (!std::binary_search(generated.begin(), generated.end(), w)) {
          extra = ", e.g. w = " + to_string(canonical_reduced_word(rs, w)) + " passes the lattice test but is not generated";
          break;
        }
      }
      report.counterexample = "lambda " + to_string(lambda) + ": lattice test selects " +
                              std::to_string(selected.size()) + " elements, reflection group has " +
                              std::to_string(generated.size()) + extra;
      return report;
    }
  }
  return report;
}

}  // namespace

SweepReport check_root_lattice_membership(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  return check_membership(rs, lambdas, "W_lambda = {w : w lambda - lambda in Q}",
                          [&](const WeylElem& w, const IntegralData& ctx) { return is_in_W_lambda(rs, w, ctx); });
}

SweepReport check_weight_lattice_membership(const RootSystem& rs, const std::vector<Weight>& lambdas) {
  return check_membership(rs, lambdas, "W_lambda = {w : w lambda - lambda in P}",
                          [](const WeylElem& w, const IntegralData& ctx) {
                            return shifts_into_weight_lattice(w, ctx.lambda);
                          });
}

// ---------------------------------------------------------------------------
// Self-check driver

std::vector<RootSystemSpec> sweep_systems(int rank_bound) {
  using CT = CartanType;
  std::vector<RootSystemSpec> all = {
      {{{CT::A, 1}}},
      {{{CT::A, 1}, {CT::A, 1}}},
      {{{CT::A, 2}}},
      {{{CT::B, 2}}},
      {{{CT::G, 2}}},
      {{{CT::A, 3}}},
      {{{CT::B, 3}}},
      {{{CT::C, 3}}},
      {{{CT::A, 1}, {CT::A, 2}}},
      {{{CT::A, 4}}},
      {{{CT::B, 4}}},
      {{{CT::D, 4}}},
  };
  std::vector<RootSystemSpec> out;
  for (auto& s : all)
    if (s.rank() <= rank_bound) out.push_back(s);
  return out;
}

std::vector<SweepReport> run_selfcheck(const SelfcheckConfig& config,
                                       const std::function<void(const SweepReport&)>& on_report) {
  std::vector<SweepReport> reports;
  auto record = [&](SweepReport r) {
    if (on_report) on_report(r);
    reports.push_back(std::move(r));
  };

  for (const auto& spec : sweep_systems(config.rank_bound)) {
    const RootSystem rs(spec);
    const int n = rs.rank();
    const bool small = n <= 2;
    const int radius = small ? config.grid_radius : std::min(config.grid_radius, 1);

    std::vector<Weight> grid = integral_box(n, radius);
    if (small) {
      const auto extra = pattern_grid(n);
      grid.insert(grid.end(), extra.begin(), extra.end());
    } else {
      const auto extra = product_grid(n, {Rational(-1, 2), Rational(1, 3), Rational(1)});
      grid.insert(grid.end(), extra.begin(), extra.end());
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const auto lambdas = dominant_lambda_samples(rs, radius);

    record(check_against_definition(rs, small ? grid : integral_box(n, 1)));
    record(check_word_independence(rs, grid));
    record(check_concatenation(rs, grid));
    record(check_certificates(rs, grid));

    auto pairs = all_pairs(integral_box(n, radius));
    const auto rnd = random_pairs(rs, config.random_pairs, config.seed + static_cast<std::uint64_t>(n));
    pairs.insert(pairs.end(), rnd.begin(), rnd.end());
    record(check_bgg_equivalence(rs, pairs));

    if (small) {
      record(check_reflexivity(rs, grid, lambdas, 1));
      for (const auto& lambda : lambdas) {
        const IntegralData ctx = integral_data(rs, lambda);
        if (ctx.stabilizer_generators.empty() || !lambda.is_integral()) continue;
        if (lambda.rank() > 0 && std::any_of(lambda.coords().begin(), lambda.coords().end(),
                                             [](const Rational& q) { return q > 1; }))
          continue;
        record(check_stabilizer_invariance(rs, lambda, 1));
      }
      std::vector<Weight> seeds = {rs.rho(), Weight::zero(n)};
      seeds.push_back(product_grid(n, {Rational(1, 2)}).front());
      seeds.push_back(product_grid(n, {Rational(1, 3)}).front());
      Weight mixed = Weight::zero(n);
      mixed = mixed + product_grid(n, {Rational(1)}).front();
      std::vector<Rational> c = mixed.coords();
      c[0] = Rational(0);
      seeds.emplace_back(c);
      record(check_simple_reflection_invariance(rs, orbit_closure(rs, seeds)));
    }

    record(check_reduce_parameters(rs, lambdas));
    record(check_integral_structure(rs, lambdas));
    record(check_root_lattice_membership(rs, lambdas));
  }
  return reports;
}

}  // namespace intertwine::oracle
