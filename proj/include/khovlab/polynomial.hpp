#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khovlab/numeric.hpp"
#include "khovlab/sumset.hpp"

namespace khovlab {

/// Univariate polynomial over Q, coefficients constant-first, trailing zeros
/// stripped.
class RationalPolynomial {
  public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    const std::vector<Rational> &coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; the zero polynomial reports -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational leading_coefficient() const;

    Rational operator()(const Rational &t) const;
    Rational operator()(const BigInt &t) const;

    bool operator==(const RationalPolynomial &other) const {
        return coeffs_ == other.coeffs_;
    }

    /// e.g. "(1/2)t^2 + (3/2)t + 1".
    std::string to_string(const std::string &var = "t") const;

  private:
    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < |points| through the given (argument, value)
/// pairs, by Newton divided differences in exact arithmetic.
/// Throws std::invalid_argument on duplicate arguments.
RationalPolynomial
newton_interpolate(const std::vector<std::pair<std::int64_t, Rational>> &points);

/// order-th forward difference sequence; order must be in [1, |seq|].
std::vector<std::int64_t> finite_differences(const std::vector<std::int64_t> &seq,
                                             int order);

struct StabilizationResult {
    std::int64_t threshold = 0; // least k0 with polynomial agreement onward
    RationalPolynomial polynomial;
    std::int64_t confirmed_upto = 0; // largest k checked

    /// Coordinates of the polynomial in the binomial basis C(t,i); integral
    /// for integer-valued polynomials.
    std::vector<Rational> binomial_coefficients() const;
};

/// Least k0 such that the degree-<=d polynomial through seq(k0..k0+d)
/// reproduces every remaining computed value, with at least `window` values
/// of confirmation; nullopt when no such k0 exists within the data.
///
/// The threshold is empirical: agreement beyond confirmed_upto is guaranteed
/// only once k0 is confronted with a proven bound.
std::optional<StabilizationResult>
detect_stabilization(const GrowthSequence &seq, int degree_bound, int window);

} // namespace khovlab
