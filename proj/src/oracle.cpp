#include "khovlab/oracle.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "khovlab/errors.hpp"

namespace khovlab {

namespace {

constexpr std::int64_t kEnumerationGuard = 10'000'000;

void check_multiset_guard(std::int64_t n, std::int64_t k, const char *who) {
    BigInt count = binomial(BigInt(static_cast<long>(n + k - 1)),
                            static_cast<unsigned>(k));
    if (count > kEnumerationGuard)
        throw guard_error(std::string(who) + ": " + count.get_str() +
                          " multisets exceed the enumeration guard");
}

void products_rec(std::int64_t n, std::int64_t k, std::int64_t min_factor,
                  const BigInt &acc, std::set<BigInt> &out) {
    if (k == 0) {
        out.insert(acc);
        return;
    }
    for (std::int64_t f = min_factor; f <= n; ++f)
        products_rec(n, k - 1, f, BigInt(acc * f), out);
}

void kfold_rec(const PointSet &a, std::int64_t k, std::size_t min_index,
               ExponentVector &acc, std::set<ExponentVector> &out) {
    if (k == 0) {
        out.insert(acc);
        return;
    }
    for (std::size_t i = min_index; i < a.size(); ++i) {
        auto p = a.point(i);
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] += p[c];
        kfold_rec(a, k - 1, i, acc, out);
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] -= p[c];
    }
}

} // namespace

std::int64_t brute_products(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0)
        throw std::domain_error("brute_products: need n >= 1, k >= 0");
    check_multiset_guard(n, k, "brute_products");
    std::set<BigInt> products;
    products_rec(n, k, 1, BigInt(1), products);
    return static_cast<std::int64_t>(products.size());
}

PointSet brute_halfspace_points(const std::vector<std::int64_t> &coeffs,
                                std::int64_t rhs, std::int64_t t) {
    if (t < 1)
        throw std::domain_error("brute_halfspace_points: t must be >= 1");
    for (std::int64_t c : coeffs)
        if (c <= 0)
            throw std::domain_error(
                "brute_halfspace_points: coefficients must be positive");

    if (rhs < 0)
        throw std::domain_error("brute_halfspace_points: negative bound");
    if (rhs > 0 && t > std::numeric_limits<std::int64_t>::max() / rhs)
        throw guard_error("brute_halfspace_points: t * rhs overflows");
    const std::int64_t budget = t * rhs;
    BigInt cells(1);
    for (std::int64_t c : coeffs)
        cells *= BigInt(static_cast<long>(budget / c + 1));
    if (cells > kEnumerationGuard)
        throw guard_error("brute_halfspace_points: box exceeds guard");

    const int d = static_cast<int>(coeffs.size());
    std::vector<ExponentVector> found;
    ExponentVector x(static_cast<std::size_t>(d), 0);
    // Enumerate the box in odometer order, keeping the running budget.
    std::int64_t used = 0;
    if (d == 0) {
        found.push_back({});
        return PointSet::from_points(0, std::move(found));
    }
    for (;;) {
        if (used <= budget)
            found.push_back(x);
        int j = d - 1;
        while (j >= 0) {
            std::size_t ju = static_cast<std::size_t>(j);
            used += coeffs[ju];
            ++x[ju];
            if (used <= budget)
                break;
            used -= coeffs[ju] * x[ju];
            x[ju] = 0;
            --j;
        }
        if (j < 0)
            break;
    }
    return PointSet::from_points(d, std::move(found));
}

PointSet brute_kfold(const PointSet &a, std::int64_t k) {
    if (k < 0)
        throw std::domain_error("brute_kfold: k must be >= 0");
    check_multiset_guard(static_cast<std::int64_t>(a.size()), k, "brute_kfold");
    std::set<ExponentVector> sums;
    ExponentVector acc(static_cast<std::size_t>(a.dim()), 0);
    kfold_rec(a, k, 0, acc, sums);
    return PointSet::from_points(
        a.dim(), std::vector<ExponentVector>(sums.begin(), sums.end()));
}

} // namespace khovlab
