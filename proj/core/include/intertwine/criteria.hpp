#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "intertwine/aset.hpp"
#include "intertwine/integral.hpp"
#include "intertwine/rootsystem.hpp"
#include "intertwine/weyl.hpp"

namespace intertwine {

/// Hom(T_{w1} M(mu1), T_{w2} M(mu2)); M(mu) has highest weight mu - rho.
struct TwistedVermaQuery {
  WeylElem w1;
  Weight mu1;
  WeylElem w2;
  Weight mu2;
};

/// Hom(L(M(w1 lambda), dM(mu1)), L(M(w2 lambda), dM(mu2))) between principal
/// series; requires lambda dominant, w_i in W_lambda and mu_i in lambda + P.
struct PrincipalSeriesQuery {
  Weight lambda;
  WeylElem w1;
  Weight mu1;
  WeylElem w2;
  Weight mu2;
};

using CriterionQuery = std::variant<TwistedVermaQuery, PrincipalSeriesQuery>;

/// A weight in both translated sets, with the A-set elements it came from.
struct Witness {
  Weight weight;
  Weight left_source;
  Certificate left_certificate;
  Weight right_source;
  Certificate right_certificate;
  /// v in W_lambda^0 applied on the right (principal series only).
  std::optional<WeylElem> stabilizer;
};

struct HomVerdict {
  bool hom_nonzero = false;
  /// Vanishing Hom forces vanishing Ext in every degree; nonzero Hom is a nonzero Ext^0.
  bool ext_all_vanish = true;
  /// Lexicographically smallest common weight, present iff hom_nonzero.
  std::optional<Witness> witness;
  std::vector<Weight> left_set;
  std::vector<Weight> right_set;
  CriterionQuery parameters;
  /// Twisted Verma query with mu1 - mu2 outside the weight lattice.
  bool lattice_mismatch = false;
};

/// w1 A_{w1^{-1}}(mu1) meets w2 w0 A_{w0 w2^{-1}}(w0 mu2), A-sets over the full simple system.
HomVerdict hom_twisted_verma(const RootSystem& rs, const TwistedVermaQuery& q,
                             const ASetProvider& provider = default_aset_provider());

/// w1^{-1} w_lambda A_{w_lambda w1}(w_lambda mu1) meets W_lambda^0 w2^{-1} A_{w2}(mu2).
/// PreconditionError when lambda is not dominant; DomainError for w_i or mu_i
/// outside W_lambda or lambda + P.
HomVerdict hom_principal_series(const RootSystem& rs, const PrincipalSeriesQuery& q,
                                const ASetProvider& provider = default_aset_provider());

/// L(M(w lambda), dM(w mu)) rewritten as L(M(w' lambda'), dM(w' mu')) with
/// lambda' dominant and w' in W_lambda'.
struct NormalizedPrincipalSeries {
  Weight lambda;
  WeylElem w;
  Weight mu;

  /// (w', w' mu') as the (w_i, mu_i) slot of a PrincipalSeriesQuery.
  std::pair<WeylElem, Weight> slot() const;
};

NormalizedPrincipalSeries normalize_principal_series(const RootSystem& rs, const Weight& lambda, const WeylElem& w,
                                                     const Weight& mu);

/// Some Ext^k is nonzero; equivalent to Hom being nonzero.
bool ext_query(const RootSystem& rs, const CriterionQuery& q,
               const ASetProvider& provider = default_aset_provider());

HomVerdict decide(const RootSystem& rs, const CriterionQuery& q,
                  const ASetProvider& provider = default_aset_provider());

}  // namespace intertwine
