#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "khovlab/bounds.hpp"
#include "khovlab/errors.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/oracle.hpp"
#include "khovlab/polytope.hpp"
#include "khovlab/sumset.hpp"

using namespace khovlab;

namespace {

// {x,y,z >= 0 : 6x + 10y + 15z <= 30}, the classical non-closed simplex.
const std::vector<std::int64_t> kSimplexCoeffs{6, 10, 15};
constexpr std::int64_t kSimplexRhs = 30;

HullSpec simplex_spec() {
    return hull_spec(brute_halfspace_points(kSimplexCoeffs, kSimplexRhs, 1));
}

std::int64_t halfspace_value(const ExponentVector &x) {
    std::int64_t v = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        v += kSimplexCoeffs[i] * x[i];
    return v;
}

} // namespace

TEST_CASE("hull_membership examples") {
    HullSpec bg = simplex_spec();
    CHECK(hull_membership({4, 2, 1}, bg, 2));
    // every generator lies in 1Q
    for (std::size_t i = 0; i < bg.generators.size(); ++i)
        CHECK(hull_membership(bg.generators.point_vector(i), bg, 1));
    HullSpec q4 = qn_spec(4);
    CHECK_FALSE(hull_membership({3, 0}, q4, 1));
    CHECK(hull_membership({2, 0}, q4, 1));
    CHECK_THROWS_AS(hull_membership({1, 2, 3}, q4, 1), dimension_error);
}

TEST_CASE("hull_membership agrees with the halfspace inequality on the box") {
    HullSpec bg = simplex_spec();
    for (std::int64_t t = 1; t <= 2; ++t) {
        ExponentVector x(3);
        for (x[0] = 0; x[0] <= 5 * t; ++x[0])
            for (x[1] = 0; x[1] <= 3 * t; ++x[1])
                for (x[2] = 0; x[2] <= 2 * t; ++x[2]) {
                    const bool direct = halfspace_value(x) <= kSimplexRhs * t;
                    CHECK(hull_membership(x, bg, t) == direct);
                }
    }
}

TEST_CASE("dilation_lattice_points on Q_n") {
    HullSpec q5 = qn_spec(5);
    CHECK(dilation_lattice_points(q5, 1) == build_mn(5));
    CHECK(dilation_lattice_points(q5, 2).size() == 14);
    CHECK(dilation_lattice_points(q5, 0) == PointSet::zero(3));
    // known-member shortcut changes nothing
    PointSet star = kfold(build_mn(5), 2);
    CHECK(dilation_lattice_points(q5, 2, &star) ==
          dilation_lattice_points(q5, 2));
}

TEST_CASE("dilation_lattice_points matches halfspace enumeration on the simplex") {
    HullSpec bg = simplex_spec();
    for (std::int64_t t = 1; t <= 2; ++t)
        CHECK(dilation_lattice_points(bg, t) ==
              brute_halfspace_points(kSimplexCoeffs, kSimplexRhs, t));
}

TEST_CASE("ehrhart small cases") {
    EhrhartResult e2 = ehrhart(qn_spec(2));
    CHECK(e2.polynomial == RationalPolynomial({Rational(1), Rational(1)}));
    CHECK(e2.volume == 1);

    EhrhartResult e4 = ehrhart(qn_spec(4));
    CHECK(e4.polynomial ==
          RationalPolynomial({Rational(1), Rational(2), Rational(1)}));
    CHECK(e4.volume == 1);
    CHECK(e4.counts == std::vector<std::int64_t>{1, 4, 9});

    EhrhartResult e5 = ehrhart(qn_spec(5));
    CHECK(e5.volume == make_rational(1, 3));

    EhrhartResult e3 = ehrhart(qn_spec(3));
    CHECK(e3.polynomial ==
          RationalPolynomial({Rational(1), make_rational(3, 2),
                              make_rational(1, 2)}));

    EhrhartResult e1 = ehrhart(qn_spec(1));
    CHECK(e1.polynomial == RationalPolynomial({Rational(1)}));
    CHECK(e1.volume == 1);
}

TEST_CASE("ehrhart rejects degenerate hulls") {
    // a segment inside the plane is not full-dimensional
    HullSpec flat = hull_spec(PointSet::from_points(2, {{0, 0}, {1, 0}}));
    CHECK_THROWS_AS(ehrhart(flat), degenerate_error);
}

TEST_CASE("star_set") {
    HullSpec bg = simplex_spec();
    PointSet star1 = star_set(bg, 1);
    CHECK(star1 == bg.generators);
    CHECK(star1.size() == 18); // 7 maximal points and those below them
    CHECK(maximal_elements(star1) ==
          PointSet::from_points(3, {{5, 0, 0},
                                    {3, 1, 0},
                                    {2, 0, 1},
                                    {1, 2, 0},
                                    {0, 3, 0},
                                    {0, 1, 1},
                                    {0, 0, 2}}));
    CHECK(star_set(qn_spec(3), 2).size() == 6);
    for (std::int64_t n : {1, 4, 6}) {
        for (std::int64_t k = 1; k <= 3; ++k)
            CHECK(star_set(qn_spec(n), k) == kfold(build_mn(n), k));
    }
}

TEST_CASE("closedness_report flags the simplex at k = 2") {
    ClosednessReport rep = closedness_report(simplex_spec(), 2);
    REQUIRE(rep.rows.size() == 2);
    CHECK(rep.rows[0].closed);
    CHECK_FALSE(rep.rows[1].closed);
    CHECK_FALSE(rep.all_closed);
    CHECK(rep.rows[1].witnesses.contains(ExponentVector{4, 2, 1}));
    CHECK(rep.rows[1].witness_total ==
          static_cast<std::int64_t>(rep.rows[1].witnesses.size()));
    CHECK(rep.rows[1].star_size < rep.rows[1].dilation_size);
}

TEST_CASE("closedness_report on Q_n") {
    ClosednessReport r4 = closedness_report(qn_spec(4), 4);
    CHECK(r4.all_closed);
    for (const auto &row : r4.rows) {
        CHECK(row.closed);
        CHECK(row.witness_total == 0);
        CHECK(row.star_size == row.dilation_size);
    }
    ClosednessReport r1 = closedness_report(qn_spec(1), 3);
    CHECK(r1.all_closed);
}

TEST_CASE("witness truncation keeps the exact total") {
    ClosednessReport rep = closedness_report(simplex_spec(), 2, 1);
    CHECK(rep.rows[1].witnesses.size() == 1);
    CHECK(rep.rows[1].witness_total >= 1);
    ClosednessReport full = closedness_report(simplex_spec(), 2);
    CHECK(rep.rows[1].witness_total == full.rows[1].witness_total);
}

TEST_CASE("star set is always inside the dilation") {
    for (std::int64_t n : {3, 6, 8}) {
        HullSpec spec = qn_spec(n);
        for (std::int64_t k = 1; k <= 3; ++k)
            CHECK(is_subset(star_set(spec, k),
                            dilation_lattice_points(spec, k)));
    }
}

TEST_CASE("int(kQ_n) sits inside (k+d)M_n") {
    for (std::int64_t n : {2, 4, 5, 6, 10}) {
        HullSpec spec = qn_spec(n);
        const int d = spec.dim();
        PointSet mn = build_mn(n);
        for (std::int64_t k = 1; k <= 3; ++k)
            CHECK(is_subset(dilation_lattice_points(spec, k),
                            kfold(mn, k + d)));
    }
}

TEST_CASE("ehrhart polynomial extrapolates to unseen dilations") {
    for (std::int64_t n : {2, 3, 4, 5, 6, 7, 8}) {
        HullSpec spec = qn_spec(n);
        EhrhartResult ehr = ehrhart(spec);
        const int d = spec.dim();
        for (int t = d + 1; t <= d + 2; ++t) {
            auto enumerated = dilation_lattice_points(spec, t).size();
            CHECK(ehr.polynomial(Rational(t)) ==
                  Rational(static_cast<unsigned long>(enumerated)));
        }
    }
}

TEST_CASE("volume respects the log-simplex bound") {
    for (std::int64_t n = 2; n <= 10; ++n) {
        Rational vol = ehrhart(qn_spec(n)).volume;
        auto verdict = decide_leq(
            vol, [n](unsigned bits) { return volume_upper_bound(n, bits); });
        CHECK(verdict.leq);
    }
}

TEST_CASE("sandwich_check") {
    auto rows5 = sandwich_check(5, 2);
    REQUIRE(rows5.size() == 2);
    CHECK(rows5[1].k == 2);
    CHECK(rows5[1].p_k == 14);
    CHECK(rows5[1].ehrhart_k == 14);
    CHECK(rows5[1].ok);

    for (const auto &row : sandwich_check(1, 4)) {
        CHECK(row.p_k == 1);
        CHECK(row.ehrhart_k == 1);
        CHECK(row.p_k_plus_d == 1);
        CHECK(row.ok);
    }

    auto rows4 = sandwich_check(4, 3);
    CHECK(rows4[2].p_k == 16);
    CHECK(rows4[2].ehrhart_k == 16);
    CHECK(rows4[2].p_k_plus_d == 36);
    CHECK(rows4[2].ok);
}
