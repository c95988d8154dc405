#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "khovlab/numeric.hpp"
#include "khovlab/polynomial.hpp"

namespace khovlab {

/// Exact rational bracket [lo, hi] around an irrational quantity, produced by
/// directed rounding at `bits` of working precision. Raising the precision
/// shrinks the bracket.
struct RationalInterval {
    Rational lo;
    Rational hi;
    unsigned bits = 0;

    bool is_point() const { return lo == hi; }
};

/// Effective Khovanskii threshold bound d! |A|^2 Vol(H(A)) - |A| + 1.
Rational gsw_bound(std::int64_t setsize, int d, const Rational &volume);

/// Encloses prod_{p <= n} log_p(n). Factors with n an exact power of p
/// contribute exact points; the rest use MPFR logs with directed rounding.
/// n = 1 gives the exact empty product [1, 1].
RationalInterval log_product_interval(std::int64_t n, unsigned bits);

/// Encloses n^2 * prod log_p(n) - n + 1. The conservative integer threshold
/// reported downstream is ceil(hi).
RationalInterval explicit_threshold(std::int64_t n, unsigned bits = 64);

/// Encloses (1/d!) * prod log_p(n), the volume bound for Q_n.
RationalInterval volume_upper_bound(std::int64_t n, unsigned bits = 64);

struct DecideResult {
    bool leq = false;
    RationalInterval interval; // the enclosure that settled the comparison
};

/// Decides value <= X for the real number X enclosed by enclose(bits),
/// doubling precision from start_bits up to max_bits until the bracket
/// separates. Throws guard_error when still inconclusive at max_bits.
DecideResult
decide_leq(const Rational &value,
           const std::function<RationalInterval(unsigned)> &enclose,
           unsigned start_bits = 64, unsigned max_bits = 1024);

struct ThresholdReport {
    std::int64_t n = 1;
    int d = 0;
    std::int64_t kmax = 0;
    Rational gsw_exact;            // d! |M_n|^2 Vol(Q_n) - n + 1
    RationalInterval explicit_bound;  // n^2 prod log_p(n) - n + 1
    BigInt explicit_ceil;             // ceil(explicit_bound.hi)
    Rational volume;               // Vol(Q_n), exact
    RationalInterval volume_bound; // (1/d!) prod log_p(n)
    std::optional<StabilizationResult> stabilization; // absent if kmax too small
    GrowthSequence growth;

    // Verdicts; interval comparisons escalate precision until conclusive.
    bool gsw_le_explicit = false;
    bool volume_le_bound = false;
    std::optional<bool> empirical_le_explicit_ceil;

    bool empirical_available() const { return stabilization.has_value(); }
    bool all_pass() const {
        return gsw_le_explicit && volume_le_bound &&
               empirical_le_explicit_ceil.value_or(false);
    }
};

/// Assembles bounds, empirical threshold and verdicts for M_n. The window
/// for stabilization detection is d + 2; when kmax is too small for it the
/// empirical fields stay empty and are flagged.
ThresholdReport threshold_report(std::int64_t n, std::int64_t kmax);

/// Same, from precomputed pieces (growth must cover k = 0..kmax for this n,
/// volume must be Vol(Q_n)).
ThresholdReport threshold_report_from(std::int64_t n,
                                      const GrowthSequence &growth,
                                      const Rational &volume);

} // namespace khovlab
