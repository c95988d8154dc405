#pragma once

#include <vector>

#include "khovlab/numeric.hpp"

namespace khovlab {

/// Decides whether { y >= 0 : A y = b } is nonempty, by a phase-1 simplex
/// with Bland's anti-cycling rule over exact rationals. The answer is a
/// certificate, not an approximation.
bool lp_equality_feasible(const std::vector<std::vector<Rational>> &matrix,
                          const std::vector<Rational> &rhs);

} // namespace khovlab
