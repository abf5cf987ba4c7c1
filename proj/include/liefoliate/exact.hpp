#pragma once

// Small exact linear algebra over the rationals. Root-system questions
// (span membership, simple-root expansions) are decided here so that no
// combinatorial answer ever depends on a floating-point tolerance.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace liefoliate {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Rank of the given vectors (all of equal length).
int rank(const std::vector<RationalVector>& vectors);

/// Coefficients c with sum_k c[k] * basis[k] == target, or nullopt when the
/// target is not in the span. The basis must be linearly independent.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& basis,
                                            const RationalVector& target);

}  // namespace liefoliate
