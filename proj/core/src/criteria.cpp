#include "intertwine/criteria.hpp"

#include <map>

#include "intertwine/errors.hpp"

namespace intertwine {

namespace {

struct Source {
  Weight weight;
  const Certificate* certificate;
  const WeylElem* stabilizer;
};

// Translated set: image weight -> first (smallest) source producing it.
using Translated = std::map<Weight, Source>;

void translate_into(Translated& out, const WeylElem& g, const ASet& set, const WeylElem* stabilizer) {
  for (const auto& [mu, cert] : set.elements) out.emplace(act(g, mu), Source{mu, &cert, stabilizer});
}

std::vector<Weight> keys(const Translated& t) {
  std::vector<Weight> out;
  out.reserve(t.size());
  for (const auto& [mu, src] : t) out.push_back(mu);
  return out;
}

void intersect(HomVerdict& verdict, const Translated& left, const Translated& right) {
  verdict.left_set = keys(left);
  verdict.right_set = keys(right);
  for (const auto& [mu, lsrc] : left) {
    auto it = right.find(mu);
    if (it == right.end()) continue;
    const Source& rsrc = it->second;
    Witness w{mu, lsrc.weight, *lsrc.certificate, rsrc.weight, *rsrc.certificate, std::nullopt};
    if (rsrc.stabilizer) w.stabilizer = *rsrc.stabilizer;
    verdict.witness = std::move(w);
    break;
  }
  verdict.hom_nonzero = verdict.witness.has_value();
  verdict.ext_all_vanish = !verdict.hom_nonzero;
}

void check_rank(const RootSystem& rs, const WeylElem& w, const char* what) {
  if (w.system() != rs.fingerprint()) throw DomainError(std::string(what) + " belongs to a different root system");
}

void check_rank(const RootSystem& rs, const Weight& mu, const char* what) {
  if (mu.rank() != rs.rank()) throw DomainError(std::string(what) + " has the wrong rank for " + rs.name());
}

}  // namespace

HomVerdict hom_twisted_verma(const RootSystem& rs, const TwistedVermaQuery& q, const ASetProvider& provider) {
  check_rank(rs, q.w1, "w1");
  check_rank(rs, q.w2, "w2");
  check_rank(rs, q.mu1, "mu1");
  check_rank(rs, q.mu2, "mu2");

  // A regular dominant integral parameter makes Pi_lambda = Pi.
  const IntegralData ctx = integral_data(rs, rs.rho());
  const WeylElem& w0 = ctx.longest;

  const ASet left_set = provider(rs, inverse(q.w1), q.mu1, ctx);
  const ASet right_set = provider(rs, multiply(w0, inverse(q.w2)), act(w0, q.mu2), ctx);

  Translated left, right;
  translate_into(left, q.w1, left_set, nullptr);
  translate_into(right, multiply(q.w2, w0), right_set, nullptr);

  HomVerdict verdict{false, true, std::nullopt, {}, {}, q, !(q.mu1 - q.mu2).is_integral()};
  intersect(verdict, left, right);
  return verdict;
}

HomVerdict hom_principal_series(const RootSystem& rs, const PrincipalSeriesQuery& q, const ASetProvider& provider) {
  check_rank(rs, q.lambda, "lambda");
  check_rank(rs, q.w1, "w1");
  check_rank(rs, q.w2, "w2");
  check_rank(rs, q.mu1, "mu1");
  check_rank(rs, q.mu2, "mu2");
  if (!rs.is_dominant(q.lambda)) {
    throw PreconditionError("lambda = " + to_string(q.lambda) +
                            " is not dominant; rewrite the parameters with normalize_principal_series first");
  }
  const IntegralData ctx = integral_data(rs, q.lambda);
  if (!is_in_W_lambda(rs, q.w1, ctx)) throw DomainError("w1 is not in W_lambda");
  if (!is_in_W_lambda(rs, q.w2, ctx)) throw DomainError("w2 is not in W_lambda");
  if (!(q.mu1 - q.lambda).is_integral()) throw DomainError("mu1 is not in lambda + P");
  if (!(q.mu2 - q.lambda).is_integral()) throw DomainError("mu2 is not in lambda + P");

  const WeylElem& wl = ctx.longest;
  const ASet left_set = provider(rs, multiply(wl, q.w1), act(wl, q.mu1), ctx);
  const ASet right_set = provider(rs, q.w2, q.mu2, ctx);

  Translated left, right;
  translate_into(left, multiply(inverse(q.w1), wl), left_set, nullptr);
  const std::vector<WeylElem> stabilizer = stabilizer_elements(rs, ctx);
  const WeylElem w2_inv = inverse(q.w2);
  for (const auto& v : stabilizer) translate_into(right, multiply(v, w2_inv), right_set, &v);

  HomVerdict verdict{false, true, std::nullopt, {}, {}, q, false};
  intersect(verdict, left, right);
  return verdict;
}

std::pair<WeylElem, Weight> NormalizedPrincipalSeries::slot() const { return {w, act(w, mu)}; }

NormalizedPrincipalSeries normalize_principal_series(const RootSystem& rs, const Weight& lambda, const WeylElem& w,
                                                     const Weight& mu) {
  check_rank(rs, lambda, "lambda");
  check_rank(rs, mu, "mu");
  check_rank(rs, w, "w");
  // w lambda = (w u^{-1}) (u lambda), w mu = (w u^{-1}) (u mu).
  auto [u, dominant] = dominant_representative(rs, lambda);
  const WeylElem moved = multiply(w, inverse(u));
  return NormalizedPrincipalSeries{dominant, reduce_parameters(rs, moved, dominant), act(u, mu)};
}

HomVerdict decide(const RootSystem& rs, const CriterionQuery& q, const ASetProvider& provider) {
  return std::visit(
      [&](const auto& query) -> HomVerdict {
        if constexpr (std::is_same_v<std::decay_t<decltype(query)>, TwistedVermaQuery>) {
          return hom_twisted_verma(rs, query, provider);
        } else {
          return hom_principal_series(rs, query, provider);
        }
      },
      q);
}

bool ext_query(const RootSystem& rs, const CriterionQuery& q, const ASetProvider& provider) {
  return decide(rs, q, provider).hom_nonzero;
}

}  // namespace intertwine
