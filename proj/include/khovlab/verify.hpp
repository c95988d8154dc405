#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "khovlab/json_io.hpp"

namespace khovlab::verify {

enum class Level { fast, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

inline constexpr int kCriterionCount = 9;

/// Runs one criterion (1..9) with its n-range capped at nmax. The
/// integral-closedness sweep stops at 14 on the fast level and 20 on full.
/// Failures are reported, never thrown.
CriterionResult run_criterion(int id, std::int64_t nmax, Level level);

/// All criteria in order.
std::vector<CriterionResult> run_criteria(std::int64_t nmax, Level level);

/// Deterministic document for the criteria (no timings, exact numbers only).
Json criteria_to_json(const std::vector<CriterionResult> &results,
                      std::int64_t nmax, Level level);

bool all_pass(const std::vector<CriterionResult> &results);

} // namespace khovlab::verify
