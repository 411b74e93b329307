#pragma once

#include <optional>
#include <vector>

#include "intertwine/rational.hpp"

namespace intertwine::detail {

// Dense row-major rational matrices, only as large as a Cartan matrix.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const std::vector<std::vector<int>>& m);

/// Gauss-Jordan inverse; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Rank of the row space spanned by `rows`.
int rank(RationalMatrix rows);

/// Coefficients x with sum_k x[k] * basis[k] == target, if any.
std::optional<std::vector<Rational>> express_in_basis(const std::vector<std::vector<Rational>>& basis,
                                                      const std::vector<Rational>& target);

}  // namespace intertwine::detail
