#include "intertwine/aset.hpp"

#include <algorithm>
#include <utility>

#include "intertwine/errors.hpp"

namespace intertwine {

std::vector<Weight> ASet::weights() const {
  std::vector<Weight> out;
  out.reserve(elements.size());
  for (const auto& [mu, cert] : elements) out.push_back(mu);
  return out;
}

bool ASet::same_elements(const ASet& other) const {
  if (elements.size() != other.elements.size()) return false;
  return std::equal(elements.begin(), elements.end(), other.elements.begin(),
                    [](const auto& a, const auto& b) { return a.first == b.first; });
}

std::vector<Root> beta_sequence(const RootSystem& rs, const std::vector<Root>& letters) {
  std::vector<Root> betas;
  betas.reserve(letters.size());
  WeylElem prefix = identity(rs);
  for (const auto& alpha : letters) {
    betas.push_back(act(rs, prefix, alpha));
    prefix = multiply(prefix, reflection(rs, alpha));
  }
  return betas;
}

std::vector<Root> letters_of(const IntegralData& ctx, const Word& word) {
  std::vector<Root> letters;
  letters.reserve(word.size());
  for (int k : word) {
    if (k < 1 || k > static_cast<int>(ctx.simple.size())) {
      throw DomainError("letter " + std::to_string(k) + " is not an index into Pi_lambda");
    }
    letters.push_back(ctx.simple[k - 1]);
  }
  return letters;
}

namespace {

using Positions = std::vector<int>;
using Partial = std::map<Weight, Positions>;

class WordEvaluator {
 public:
  WordEvaluator(const RootSystem& rs, const std::vector<Root>& letters) : rs_(rs), letters_(letters) {}

  const Partial& eval(std::size_t k, const Weight& mu) {
    auto key = std::make_pair(k, mu);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Partial out;
    if (k == letters_.size()) {
      out.emplace(mu, Positions{});
    } else {
      const Root& alpha = letters_[k];
      for (const auto& [nu, pos] : eval(k + 1, rs_.reflect(alpha, mu))) {
        insert(out, rs_.reflect(alpha, nu), pos);
      }
      if (is_negative_integer(rs_.pairing(alpha, mu))) {
        for (const auto& [nu, pos] : eval(k + 1, mu)) {
          Positions with_k{static_cast<int>(k) + 1};
          with_k.insert(with_k.end(), pos.begin(), pos.end());
          insert(out, rs_.reflect(alpha, nu), std::move(with_k));
        }
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

 private:
  static void insert(Partial& out, Weight mu, Positions pos) {
    auto [it, fresh] = out.emplace(std::move(mu), pos);
    if (!fresh && pos < it->second) it->second = std::move(pos);
  }

  const RootSystem& rs_;
  const std::vector<Root>& letters_;
  // node-based, so references handed out by eval() survive later insertions
  std::map<std::pair<std::size_t, Weight>, Partial> memo_;
};

}  // namespace

ASet a_set_word(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu, const IntegralData& ctx) {
  for (const auto& alpha : letters) {
    if (std::find(ctx.simple.begin(), ctx.simple.end(), alpha) == ctx.simple.end()) {
      throw DomainError("letter " + to_string(alpha) + " is not in Pi_lambda");
    }
  }
  if (mu.rank() != rs.rank()) throw DomainError("weight rank does not match " + rs.name());

  const std::vector<Root> betas = beta_sequence(rs, letters);
  WordEvaluator evaluator(rs, letters);
  const Partial& result = evaluator.eval(0, mu);

  ASet out;
  for (const auto& [nu, pos] : result) {
    Certificate cert{pos, {}};
    for (int p : pos) cert.roots.push_back(betas[p - 1]);
    out.elements.emplace(nu, std::move(cert));
  }
  return out;
}

ASet a_set(const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx) {
  const Word word = integral_reduced_word(rs, w, ctx);
  return a_set_word(rs, letters_of(ctx, word), mu, ctx);
}

std::vector<ASet> a_set_all_words(const RootSystem& rs, const WeylElem& w, const Weight& mu,
                                  const IntegralData& ctx, int max_length) {
  std::vector<ASet> out;
  for (const auto& word : all_integral_reduced_words(rs, w, ctx, max_length)) {
    out.push_back(a_set_word(rs, letters_of(ctx, word), mu, ctx));
  }
  return out;
}

std::optional<Weight> replay_certificate(const RootSystem& rs, const std::vector<Root>& letters, const Weight& mu,
                                         const Certificate& cert) {
  if (cert.positions.size() != cert.roots.size()) return std::nullopt;
  const std::vector<Root> betas = beta_sequence(rs, letters);
  Weight current = mu;
  int previous = 0;
  for (std::size_t k = 0; k < cert.positions.size(); ++k) {
    const int p = cert.positions[k];
    if (p <= previous || p > static_cast<int>(betas.size())) return std::nullopt;
    if (!(betas[p - 1] == cert.roots[k])) return std::nullopt;
    if (!is_negative_integer(rs.pairing(betas[p - 1], current))) return std::nullopt;
    current = rs.reflect(betas[p - 1], current);
    previous = p;
  }
  return current;
}

ASetProvider default_aset_provider() {
  return [](const RootSystem& rs, const WeylElem& w, const Weight& mu, const IntegralData& ctx) {
    return a_set(rs, w, mu, ctx);
  };
}

}  // namespace intertwine
