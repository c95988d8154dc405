#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khovlab/pointset.hpp"

namespace khovlab {

/// f(k) = |kA| for k = 0..kmax; f(0) = 1 by the empty-sum convention.
struct GrowthSequence {
    std::optional<std::int64_t> n; // set when A = M_n
    std::vector<std::int64_t> values;

    std::int64_t kmax() const {
        return static_cast<std::int64_t>(values.size()) - 1;
    }
};

/// Which k-fold iteration strategy to use. Both produce identical sets; the
/// pruned path requires a down-set and is exercised against the plain path in
/// the test suite.
enum class SumsetPath { plain, downset_pruned };

/// { a + b : a in A, b in B }. Throws dimension_error on mismatch.
PointSet add_sets(const PointSet &a, const PointSet &b);

/// k-fold sumset, computed incrementally as ((k-1)A + A); k = 0 gives {0}.
PointSet kfold(const PointSet &a, std::int64_t k,
               SumsetPath path = SumsetPath::plain);

/// |kA| for k = 0..kmax in one incremental pass.
GrowthSequence growth_sequence(const PointSet &a, std::int64_t kmax);

/// true iff A is closed under component-wise decrease (toward 0).
/// Throws std::domain_error when A has a negative coordinate.
bool is_downset(const PointSet &a);

/// The antichain of maximal points. Requires a down-set (checked by the
/// y + e_j membership criterion, which is only valid there).
PointSet maximal_elements(const PointSet &downset);

/// All points z with 0 <= z <= g for some generator g.
PointSet down_closure(const PointSet &generators);

} // namespace khovlab
