#include "khovlab/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "khovlab/errors.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/lp.hpp"
#include "khovlab/sumset.hpp"

namespace khovlab {

namespace {

constexpr std::int64_t kBoxGuard = 10'000'000;

/// Rank over Q of the differences generator_i - generator_0; equals dim
/// exactly when conv(generators) is full-dimensional.
int affine_rank(const PointSet &gens) {
    const int d = gens.dim();
    if (gens.empty() || d == 0)
        return 0;
    std::vector<std::vector<Rational>> rows;
    auto base = gens.point(0);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        auto p = gens.point(i);
        std::vector<Rational> row(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j)
            row[static_cast<std::size_t>(j)] =
                Rational(BigInt(p[static_cast<std::size_t>(j)] -
                                base[static_cast<std::size_t>(j)]));
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() &&
               rows[pivot][static_cast<std::size_t>(col)] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const auto &prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) ||
                rows[i][static_cast<std::size_t>(col)] == 0)
                continue;
            Rational f = rows[i][static_cast<std::size_t>(col)] /
                         prow[static_cast<std::size_t>(col)];
            for (int j = col; j < d; ++j)
                rows[i][static_cast<std::size_t>(j)] -=
                    f * prow[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

/// Walk exponent vectors with prod p_j^{a_j} <= bound, exact bigints only.
void smooth_walk(const PrimeBasis &basis, const BigInt &bound, int coord,
                 ExponentVector &current, BigInt &product,
                 std::vector<ExponentVector> &out) {
    if (coord == basis.dim()) {
        out.push_back(current);
        return;
    }
    const BigInt p(static_cast<long>(basis.primes[static_cast<std::size_t>(coord)]));
    BigInt saved = product;
    Coord e = 0;
    for (;;) {
        smooth_walk(basis, bound, coord + 1, current, product, out);
        product *= p;
        if (product > bound)
            break;
        ++e;
        current[static_cast<std::size_t>(coord)] = e;
    }
    current[static_cast<std::size_t>(coord)] = 0;
    product = saved;
}

std::vector<ExponentVector> dilation_candidates(const HullSpec &spec,
                                                std::int64_t t) {
    std::vector<ExponentVector> out;
    const int d = spec.dim();
    if (spec.smooth_n) {
        PrimeBasis basis = primes_upto(*spec.smooth_n);
        BigInt bound = power(BigInt(static_cast<long>(*spec.smooth_n)),
                             static_cast<unsigned long>(t));
        ExponentVector current(static_cast<std::size_t>(d), 0);
        BigInt product(1);
        smooth_walk(basis, bound, 0, current, product, out);
        return out;
    }

    // Generic fallback: the coordinate box spanned by the dilated generators.
    const PointSet &gens = spec.generators;
    std::vector<Coord> lo(static_cast<std::size_t>(d), 0);
    std::vector<Coord> hi(static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto p = gens.point(i);
        for (int j = 0; j < d; ++j) {
            Coord c = p[static_cast<std::size_t>(j)];
            if (i == 0 || c < lo[static_cast<std::size_t>(j)])
                lo[static_cast<std::size_t>(j)] = c;
            if (i == 0 || c > hi[static_cast<std::size_t>(j)])
                hi[static_cast<std::size_t>(j)] = c;
        }
    }
    BigInt cells(1);
    for (int j = 0; j < d; ++j) {
        BigInt lo_j = BigInt(static_cast<long>(t)) *
                      lo[static_cast<std::size_t>(j)];
        BigInt hi_j = BigInt(static_cast<long>(t)) *
                      hi[static_cast<std::size_t>(j)];
        if (abs(lo_j) >= kCoordLimit || abs(hi_j) >= kCoordLimit)
            throw guard_error("dilated box exceeds the coordinate guard");
        cells *= hi_j - lo_j + 1;
    }
    if (cells > kBoxGuard)
        throw guard_error("dilation box enumeration beyond guard (" +
                          cells.get_str() + " cells)");

    ExponentVector current(static_cast<std::size_t>(d), 0);
    std::vector<ExponentVector> stack;
    // Odometer over the box [t*lo_j, t*hi_j].
    for (int j = 0; j < d; ++j)
        current[static_cast<std::size_t>(j)] = t * lo[static_cast<std::size_t>(j)];
    if (d == 0) {
        out.push_back({});
        return out;
    }
    for (;;) {
        out.push_back(current);
        int j = d - 1;
        while (j >= 0 &&
               current[static_cast<std::size_t>(j)] ==
                   t * hi[static_cast<std::size_t>(j)]) {
            current[static_cast<std::size_t>(j)] =
                t * lo[static_cast<std::size_t>(j)];
            --j;
        }
        if (j < 0)
            break;
        ++current[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace

HullSpec qn_spec(std::int64_t n) {
    HullSpec spec;
    spec.generators = build_mn(n);
    spec.smooth_n = n;
    return spec;
}

HullSpec hull_spec(PointSet generators) {
    if (generators.empty())
        throw std::invalid_argument("hull_spec: empty generating set");
    HullSpec spec;
    spec.generators = std::move(generators);
    spec.smooth_n = std::nullopt;
    return spec;
}

bool hull_membership(const ExponentVector &x, const HullSpec &spec,
                     std::int64_t t) {
    const int d = spec.dim();
    if (static_cast<int>(x.size()) != d)
        throw dimension_error("hull_membership: dimension mismatch");
    if (t < 0)
        throw std::domain_error("hull_membership: negative dilation");
    const PointSet &gens = spec.generators;

    // d coordinate rows plus the sum row; columns are the generators.
    std::vector<std::vector<Rational>> matrix(
        static_cast<std::size_t>(d) + 1,
        std::vector<Rational>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto v = gens.point(i);
        for (int j = 0; j < d; ++j)
            matrix[static_cast<std::size_t>(j)][i] =
                Rational(BigInt(v[static_cast<std::size_t>(j)]));
        matrix[static_cast<std::size_t>(d)][i] = 1;
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j < d; ++j)
        rhs[static_cast<std::size_t>(j)] =
            Rational(BigInt(x[static_cast<std::size_t>(j)]));
    rhs[static_cast<std::size_t>(d)] = Rational(static_cast<long>(t));
    return lp_equality_feasible(matrix, rhs);
}

PointSet dilation_lattice_points(const HullSpec &spec, std::int64_t t,
                                 const PointSet *known_members) {
    if (t < 0)
        throw std::domain_error("dilation_lattice_points: negative dilation");
    const int d = spec.dim();
    if (t == 0)
        return PointSet::zero(d);

    PointSetBuilder out(d);
    for (const auto &cand : dilation_candidates(spec, t)) {
        if (known_members && known_members->contains(cand)) {
            out.insert(cand);
            continue;
        }
        if (hull_membership(cand, spec, t))
            out.insert(cand);
    }
    return out.finish();
}

EhrhartResult ehrhart(const HullSpec &spec) {
    const int d = spec.dim();
    if (affine_rank(spec.generators) != d)
        throw degenerate_error("ehrhart: hull is not full-dimensional");

    EhrhartResult res;
    std::vector<std::pair<std::int64_t, Rational>> nodes;
    for (int t = 0; t <= d; ++t) {
        std::int64_t count = static_cast<std::int64_t>(
            dilation_lattice_points(spec, t).size());
        res.counts.push_back(count);
        nodes.emplace_back(t, Rational(count));
    }
    res.polynomial = newton_interpolate(nodes);
    if (d == 0) {
        res.volume = 1; // point polytope, by convention
        return res;
    }
    if (res.polynomial.degree() != d)
        throw std::logic_error("ehrhart: interpolated degree below dimension");
    res.volume = res.polynomial.leading_coefficient();
    if (res.volume <= 0)
        throw std::logic_error("ehrhart: nonpositive volume");
    return res;
}

PointSet star_set(const HullSpec &spec, std::int64_t k) {
    if (k < 1)
        throw std::domain_error("star_set: k must be >= 1");
    return kfold(dilation_lattice_points(spec, 1), k);
}

ClosednessReport closedness_report(const HullSpec &spec, std::int64_t kmax,
                                   std::size_t witness_cap) {
    if (kmax < 1)
        throw std::domain_error("closedness_report: kmax must be >= 1");
    ClosednessReport report;
    const PointSet int_q = dilation_lattice_points(spec, 1);
    PointSet star = int_q;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        if (k > 1)
            star = add_sets(star, int_q);
        // Star points are sums of k lattice points of Q, hence inside kQ;
        // they can skip the membership LP.
        PointSet dilation = dilation_lattice_points(spec, k, &star);
        if (!is_subset(star, dilation))
            throw std::logic_error("closedness: star set escapes dilation");
        PointSet gaps = set_difference(dilation, star);

        ClosednessRow row;
        row.k = k;
        row.star_size = static_cast<std::int64_t>(star.size());
        row.dilation_size = static_cast<std::int64_t>(dilation.size());
        row.witness_total = static_cast<std::int64_t>(gaps.size());
        row.closed = gaps.empty();
        if (gaps.size() > witness_cap) {
            std::vector<ExponentVector> head;
            for (std::size_t i = 0; i < witness_cap; ++i)
                head.push_back(gaps.point_vector(i));
            row.witnesses = PointSet::from_points(spec.dim(), std::move(head));
        } else {
            row.witnesses = std::move(gaps);
        }
        report.all_closed = report.all_closed && row.closed;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<SandwichRow> sandwich_check(std::int64_t n, std::int64_t kmax) {
    if (n < 1 || kmax < 1)
        throw std::domain_error("sandwich_check: n and kmax must be >= 1");
    HullSpec spec = qn_spec(n);
    const int d = spec.dim();

    // One incremental pass gives p(k, n) up to kmax + d and, along the way,
    // the star set kM_n used to shortcut the dilation enumeration.
    std::vector<std::int64_t> p{1};
    std::vector<std::int64_t> ehrhart_counts;
    PointSet acc = PointSet::zero(d);
    for (std::int64_t k = 1; k <= kmax + d; ++k) {
        acc = add_sets(acc, spec.generators);
        p.push_back(static_cast<std::int64_t>(acc.size()));
        if (k <= kmax)
            ehrhart_counts.push_back(static_cast<std::int64_t>(
                dilation_lattice_points(spec, k, &acc).size()));
    }

    std::vector<SandwichRow> rows;
    for (std::int64_t k = 1; k <= kmax; ++k) {
        SandwichRow row;
        row.k = k;
        row.p_k = p[static_cast<std::size_t>(k)];
        row.ehrhart_k = ehrhart_counts[static_cast<std::size_t>(k - 1)];
        row.p_k_plus_d = p[static_cast<std::size_t>(k + d)];
        row.ok = row.p_k <= row.ehrhart_k && row.ehrhart_k <= row.p_k_plus_d;
        rows.push_back(row);
    }
    return rows;
}

} // namespace khovlab
