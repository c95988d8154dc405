#pragma once

#include <cstdint>
#include <vector>

#include "khovlab/numeric.hpp"
#include "khovlab/pointset.hpp"

namespace khovlab {

// Brute-force references. They share no enumeration or dedup machinery with
// the engines they check: products go through bigint multiplication into an
// ordered set, sums through tuple enumeration. Correctness over speed.

/// |P(k, n)|: distinct products of k factors from {1..n}, enumerated as
/// multisets. Guarded by C(n+k-1, k) <= 10^7.
std::int64_t brute_products(std::int64_t n, std::int64_t k);

/// All x >= 0 with sum coeffs_i x_i <= t * rhs, by box enumeration.
/// Coefficients must be positive.
PointSet brute_halfspace_points(const std::vector<std::int64_t> &coeffs,
                                std::int64_t rhs, std::int64_t t);

/// k-fold sumset by direct enumeration of k-multisets, no incremental reuse.
/// Guarded by C(|A|+k-1, k) <= 10^7.
PointSet brute_kfold(const PointSet &a, std::int64_t k);

} // namespace khovlab
