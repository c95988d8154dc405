#pragma once

#include <cstdint>
#include <vector>

#include "khovlab/numeric.hpp"
#include "khovlab/pointset.hpp"

namespace khovlab {

/// The primes p_1 < ... < p_d up to n. d == 0 exactly when n == 1.
struct PrimeBasis {
    std::int64_t n = 1;
    std::vector<std::int64_t> primes;

    int dim() const { return static_cast<int>(primes.size()); }
};

/// All primes <= n by sieve; n >= 1 required (n == 1 gives the empty basis).
PrimeBasis primes_upto(std::int64_t n);

/// Exponent tuple of m over the basis: prod p_j^{coords_j} == m.
/// Throws std::domain_error when a prime factor of m is outside the basis.
ExponentVector factor_vector(const BigInt &m, const PrimeBasis &basis);

/// Inverse of factor_vector: the exact product prod p_j^{v_j}.
BigInt vector_value(const ExponentVector &v, const PrimeBasis &basis);

/// The exponent vectors of 1..n: all v >= 0 with prod p_j^{v_j} <= n.
/// Membership is decided by exact bigint products, never by logarithms.
PointSet build_mn(std::int64_t n);

} // namespace khovlab
