#include "khovlab/polynomial.hpp"

#include <stdexcept>

namespace khovlab {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational RationalPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational &t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

Rational RationalPolynomial::operator()(const BigInt &t) const {
    return (*this)(Rational(t));
}

std::string RationalPolynomial::to_string(const std::string &var) const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational &c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit = (a == 1);
        if (i == 0 || !unit) {
            if (a.get_den() == 1)
                out += a.get_num().get_str();
            else
                out += "(" + rational_to_string(a) + ")";
        }
        if (i >= 1) {
            out += var;
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

RationalPolynomial newton_interpolate(
    const std::vector<std::pair<std::int64_t, Rational>> &points) {
    const std::size_t m = points.size();
    if (m == 0)
        return RationalPolynomial{};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument(
                    "newton_interpolate: duplicate argument " +
                    std::to_string(points[i].first));

    // Divided-difference table, kept in place: after level l, dd[i] holds
    // f[x_i..x_{i+l}].
    std::vector<Rational> dd(m);
    for (std::size_t i = 0; i < m; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t i = m - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) /
                    Rational(BigInt(points[i].first) -
                             BigInt(points[i - level].first));

    // Expand sum of dd[j] * prod_{i<j} (t - x_i) into the monomial basis.
    std::vector<Rational> result{dd[0]};
    std::vector<Rational> basis{Rational(1)};
    for (std::size_t j = 1; j < m; ++j) {
        Rational node(BigInt(points[j - 1].first));
        basis.push_back(Rational(0));
        for (std::size_t i = basis.size() - 1; i >= 1; --i)
            basis[i] = basis[i - 1] - node * basis[i];
        basis[0] = -node * basis[0];

        if (result.size() < basis.size())
            result.resize(basis.size(), Rational(0));
        for (std::size_t i = 0; i < basis.size(); ++i)
            result[i] += dd[j] * basis[i];
    }
    return RationalPolynomial(std::move(result));
}

std::vector<std::int64_t> finite_differences(const std::vector<std::int64_t> &seq,
                                             int order) {
    if (order < 1 || static_cast<std::size_t>(order) > seq.size())
        throw std::invalid_argument("finite_differences: order out of range");
    std::vector<std::int64_t> cur = seq;
    for (int level = 0; level < order; ++level) {
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            cur[i] = cur[i + 1] - cur[i];
        cur.pop_back();
    }
    return cur;
}

std::vector<Rational> StabilizationResult::binomial_coefficients() const {
    // Coordinates in the binomial basis are the forward differences at 0.
    int deg = std::max(polynomial.degree(), 0);
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(deg) + 1);
    for (int t = 0; t <= deg; ++t)
        values.push_back(polynomial(Rational(t)));
    std::vector<Rational> out;
    out.reserve(values.size());
    for (std::size_t level = 0; level < values.size(); ++level) {
        out.push_back(values[0]);
        for (std::size_t i = 0; i + 1 < values.size() - level; ++i)
            values[i] = values[i + 1] - values[i];
    }
    return out;
}

std::optional<StabilizationResult>
detect_stabilization(const GrowthSequence &seq, int degree_bound, int window) {
    if (degree_bound < 0 || window < 1)
        throw std::invalid_argument("detect_stabilization: bad parameters");
    const auto &values = seq.values;
    const std::int64_t len = static_cast<std::int64_t>(values.size());
    const std::int64_t d = degree_bound;
    if (len < d + 1 + window)
        throw std::invalid_argument("detect_stabilization: insufficient data");

    // The fit through seq(k0..k0+d) extends to all later values exactly when
    // the (d+1)-th differences vanish from index k0 on.
    std::vector<std::int64_t> diffs =
        finite_differences(values, static_cast<int>(d) + 1);
    std::int64_t first_zero_tail = 0;
    for (std::int64_t j = static_cast<std::int64_t>(diffs.size()); j-- > 0;) {
        if (diffs[static_cast<std::size_t>(j)] != 0) {
            first_zero_tail = j + 1;
            break;
        }
    }
    const std::int64_t kmax = len - 1;
    if (first_zero_tail > kmax - d - window)
        return std::nullopt; // not enough confirmation data past the fit

    const std::int64_t k0 = first_zero_tail;
    std::vector<std::pair<std::int64_t, Rational>> nodes;
    nodes.reserve(static_cast<std::size_t>(d) + 1);
    for (std::int64_t k = k0; k <= k0 + d; ++k)
        nodes.emplace_back(k, Rational(values[static_cast<std::size_t>(k)]));
    StabilizationResult res;
    res.threshold = k0;
    res.polynomial = newton_interpolate(nodes);
    res.confirmed_upto = kmax;
    for (std::int64_t k = k0; k <= kmax; ++k)
        if (res.polynomial(Rational(static_cast<long>(k))) !=
            values[static_cast<std::size_t>(k)])
            throw std::logic_error("detect_stabilization: fit check failed");
    return res;
}

} // namespace khovlab
