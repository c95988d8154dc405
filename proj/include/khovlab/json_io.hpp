#pragma once

#include <json.hpp>

#include "khovlab/bounds.hpp"
#include "khovlab/polynomial.hpp"
#include "khovlab/polytope.hpp"
#include "khovlab/pointset.hpp"
#include "khovlab/sumset.hpp"

namespace khovlab {

// Field order is fixed by construction (ordered_json) so identical inputs
// always serialize to identical bytes. Exact numbers only: rationals as
// {"num": "...", "den": "..."} decimal strings, never floating point.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const BigInt &z);
Json to_json(const Rational &q);
Json to_json(const RationalInterval &iv);
Json to_json(const PointSet &set);
Json to_json(const RationalPolynomial &poly);
Json to_json(const GrowthSequence &seq);
Json to_json(const EhrhartResult &ehr);
Json to_json(const StabilizationResult &stab);
Json to_json(const ClosednessReport &report);
Json to_json(const std::vector<SandwichRow> &rows);
Json to_json(const ThresholdReport &report);

/// Parses {"num","den"} back into a canonical rational.
Rational rational_from_json(const Json &j);

} // namespace khovlab
