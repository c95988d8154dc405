#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khovlab/numeric.hpp"
#include "khovlab/polynomial.hpp"
#include "khovlab/pointset.hpp"

namespace khovlab {

/// Q = conv(generators). For specs built from M_n the smooth bound n is kept
/// so dilation enumeration can walk exponent vectors under the exact product
/// bound prod p_j^{a_j} <= n^t instead of a coordinate box.
struct HullSpec {
    PointSet generators;
    std::optional<std::int64_t> smooth_n;

    int dim() const { return generators.dim(); }
};

/// The HullSpec for Q_n = conv(M_n).
HullSpec qn_spec(std::int64_t n);

/// A HullSpec from an explicit generating set.
HullSpec hull_spec(PointSet generators);

/// x in t*Q? Exact rational LP feasibility of
///     sum_i l_i v_i = x,  sum_i l_i = t,  l_i >= 0.
bool hull_membership(const ExponentVector &x, const HullSpec &spec,
                     std::int64_t t);

/// All lattice points of t*Q; t = 0 gives {0}. Candidates come from the
/// smooth-number walk (Q_n specs) or the coordinate box [t*min_j, t*max_j]
/// (generic specs; box enumeration, tiny examples only), then pass through
/// hull_membership. `known_members` may carry points already proven inside
/// (e.g. a star set); they skip the LP.
PointSet dilation_lattice_points(const HullSpec &spec, std::int64_t t,
                                 const PointSet *known_members = nullptr);

struct EhrhartResult {
    RationalPolynomial polynomial;       // L(Q, t), degree dim
    std::vector<std::int64_t> counts;    // L(Q, t) for t = 0..dim
    Rational volume;                     // leading coefficient
};

/// Counts L(Q, t) at t = 0..d and interpolates the Ehrhart polynomial; the
/// volume is its leading coefficient (1 for d = 0 by convention).
/// Throws degenerate_error when conv(generators) is not full-dimensional.
EhrhartResult ehrhart(const HullSpec &spec);

/// k-fold sumset of the lattice points of Q.
PointSet star_set(const HullSpec &spec, std::int64_t k);

struct ClosednessRow {
    std::int64_t k = 0;
    std::int64_t star_size = 0;     // |k * Q|
    std::int64_t dilation_size = 0; // |int(kQ)|
    bool closed = false;
    PointSet witnesses;             // int(kQ) \ k*Q, possibly truncated
    std::int64_t witness_total = 0; // exact count before truncation
};

struct ClosednessReport {
    std::vector<ClosednessRow> rows;
    bool all_closed = true;
};

/// Compares k*Q with int(kQ) for k = 1..kmax, collecting gap witnesses
/// (truncated to witness_cap entries, with the exact total kept).
ClosednessReport closedness_report(const HullSpec &spec, std::int64_t kmax,
                                   std::size_t witness_cap = 100);

struct SandwichRow {
    std::int64_t k = 0;
    std::int64_t p_k = 0;        // p(k, n)
    std::int64_t ehrhart_k = 0;  // L(Q_n, k), by direct enumeration
    std::int64_t p_k_plus_d = 0; // p(k + pi(n), n)
    bool ok = false;
};

/// Verifies p(k,n) <= L(Q_n,k) <= p(k+pi(n),n) for k = 1..kmax.
std::vector<SandwichRow> sandwich_check(std::int64_t n, std::int64_t kmax);

} // namespace khovlab
