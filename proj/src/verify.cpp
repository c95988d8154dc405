#include "khovlab/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <sstream>

#include "khovlab/bounds.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/oracle.hpp"
#include "khovlab/polytope.hpp"
#include "khovlab/sumset.hpp"

namespace khovlab::verify {

namespace {

struct Check {
    bool ok = true;
    std::int64_t cases = 0;
    std::string first_failure;

    void expect(bool cond, const std::string &what) {
        ++cases;
        if (!cond && ok) {
            ok = false;
            first_failure = what;
        }
    }
    CriterionResult result(int id, const std::string &name) const {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.pass = ok;
        r.detail = ok ? std::to_string(cases) + " checks"
                      : first_failure;
        return r;
    }
};

std::string fmt_case(std::int64_t n, std::int64_t k, const std::string &msg) {
    std::ostringstream os;
    os << "n=" << n << " k=" << k << ": " << msg;
    return os.str();
}

CriterionResult guarded(int id, const std::string &name,
                        const std::function<CriterionResult()> &body) {
    try {
        return body();
    } catch (const std::exception &e) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
        return r;
    }
}

CriterionResult oracle_equivalence(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 2; n <= std::min<std::int64_t>(nmax, 8); ++n) {
        PointSet mn = build_mn(n);
        GrowthSequence seq = growth_sequence(mn, 5);
        for (std::int64_t k = 0; k <= 5; ++k)
            c.expect(seq.values[static_cast<std::size_t>(k)] ==
                         brute_products(n, k),
                     fmt_case(n, k, "|kM_n| != brute product count"));
    }
    return c.result(1, "oracle-equivalence");
}

CriterionResult closed_forms(std::int64_t nmax) {
    Check c;
    const std::int64_t kmax = 30;
    auto values = [&](std::int64_t n) {
        return growth_sequence(build_mn(n), kmax).values;
    };
    if (nmax >= 2) {
        auto v = values(2);
        for (std::int64_t k = 0; k <= kmax; ++k)
            c.expect(v[static_cast<std::size_t>(k)] == k + 1,
                     fmt_case(2, k, "p != k+1"));
    }
    if (nmax >= 3) {
        auto v = values(3);
        for (std::int64_t k = 0; k <= kmax; ++k)
            c.expect(v[static_cast<std::size_t>(k)] == (k + 1) * (k + 2) / 2,
                     fmt_case(3, k, "p != (k+1)(k+2)/2"));
    }
    if (nmax >= 4) {
        auto v = values(4);
        for (std::int64_t k = 0; k <= kmax; ++k)
            c.expect(v[static_cast<std::size_t>(k)] == (k + 1) * (k + 1),
                     fmt_case(4, k, "p != (k+1)^2"));
    }
    return c.result(2, "closed-forms");
}

CriterionResult stabilized_degrees(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(nmax, 10); ++n) {
        const int d = primes_upto(n).dim();
        GrowthSequence seq = growth_sequence(build_mn(n), 2 * d + 8);
        auto stab = detect_stabilization(seq, d, d + 2);
        c.expect(stab.has_value(), fmt_case(n, 2 * d + 8, "no stabilization"));
        if (stab)
            c.expect(stab->polynomial.degree() == d,
                     fmt_case(n, stab->threshold, "degree != pi(n)"));
    }
    return c.result(3, "stabilized-degree-pi-n");
}

CriterionResult leading_coefficient_volume(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(nmax, 12); ++n) {
        const int d = primes_upto(n).dim();
        GrowthSequence seq = growth_sequence(build_mn(n), 2 * d + 8);
        auto stab = detect_stabilization(seq, d, d + 2);
        c.expect(stab.has_value(), fmt_case(n, 0, "no stabilization"));
        if (!stab)
            continue;
        EhrhartResult ehr = ehrhart(qn_spec(n));
        c.expect(stab->polynomial.leading_coefficient() == ehr.volume,
                 fmt_case(n, 0, "leading coefficient != volume"));
    }
    return c.result(4, "leading-coefficient-equals-volume");
}

CriterionResult sandwich(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(nmax, 10); ++n)
        for (const auto &row : sandwich_check(n, 10))
            c.expect(row.ok, fmt_case(n, row.k, "sandwich violated"));
    return c.result(5, "sandwich-inequalities");
}

CriterionResult simplex_example() {
    Check c;
    const std::vector<std::int64_t> coeffs{6, 10, 15};
    PointSet lattice = brute_halfspace_points(coeffs, 30, 1);
    PointSet maximal = maximal_elements(lattice);
    PointSet expected = PointSet::from_points(
        3, {{5, 0, 0}, {3, 1, 0}, {2, 0, 1}, {1, 2, 0},
            {0, 3, 0}, {0, 1, 1}, {0, 0, 2}});
    c.expect(maximal == expected, "maximal lattice points differ");

    HullSpec spec = hull_spec(lattice);
    ClosednessReport report = closedness_report(spec, 2);
    c.expect(report.rows[0].closed, "k=1 should be closed");
    c.expect(!report.rows[1].closed, "k=2 should not be closed");
    c.expect(report.rows[1].witnesses.contains(ExponentVector{4, 2, 1}),
             "witness (4,2,1) missing");
    c.expect(hull_membership({4, 2, 1}, spec, 2), "(4,2,1) should lie in 2Q");
    return c.result(6, "simplex-counterexample");
}

CriterionResult qn_closedness(std::int64_t nmax, Level level) {
    Check c;
    const std::int64_t cap = level == Level::full ? 20 : 14;
    for (std::int64_t n = 1; n <= std::min(nmax, cap); ++n) {
        const int d = primes_upto(n).dim();
        ClosednessReport report =
            closedness_report(qn_spec(n), std::max(1, d));
        for (const auto &row : report.rows)
            c.expect(row.closed && row.witness_total == 0,
                     fmt_case(n, row.k, "Q_n not closed here"));
    }
    return c.result(7, "qn-integrally-closed");
}

CriterionResult bounds_coherence(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 2; n <= std::min<std::int64_t>(nmax, 14); ++n) {
        const int d = primes_upto(n).dim();
        ThresholdReport rep = threshold_report(n, 2 * d + 2);
        c.expect(rep.gsw_le_explicit, fmt_case(n, 0, "gsw > explicit bound"));
        c.expect(rep.volume_le_bound, fmt_case(n, 0, "volume > bound"));
        c.expect(rep.empirical_available(),
                 fmt_case(n, 0, "no empirical threshold"));
        c.expect(rep.empirical_le_explicit_ceil.value_or(false),
                 fmt_case(n, 0, "empirical > ceil(explicit bound)"));
        if (n == 2) {
            c.expect(rep.explicit_bound.is_point() && rep.explicit_bound.lo == 3,
                     fmt_case(n, 0, "explicit threshold should be exactly 3"));
        }
        if (n == 4)
            c.expect(rep.explicit_ceil == 38,
                     fmt_case(n, 0, "explicit threshold should round to 38"));
    }
    return c.result(8, "bounds-coherence");
}

CriterionResult ehrhart_sanity(std::int64_t nmax) {
    Check c;
    for (std::int64_t n = 1; n <= std::min<std::int64_t>(nmax, 14); ++n) {
        HullSpec spec = qn_spec(n);
        c.expect(dilation_lattice_points(spec, 0).size() == 1,
                 fmt_case(n, 0, "L(Q_n,0) != 1"));
        c.expect(static_cast<std::int64_t>(
                     dilation_lattice_points(spec, 1).size()) == n,
                 fmt_case(n, 1, "L(Q_n,1) != n"));
        if (n <= 10) {
            const int d = spec.dim();
            EhrhartResult ehr = ehrhart(spec);
            Rational predicted = ehr.polynomial(Rational(d + 1));
            std::int64_t enumerated = static_cast<std::int64_t>(
                dilation_lattice_points(spec, d + 1).size());
            c.expect(predicted == Rational(static_cast<long>(enumerated)),
                     fmt_case(n, d + 1, "polynomial != enumeration"));
        }
    }
    return c.result(9, "ehrhart-sanity");
}

} // namespace

CriterionResult run_criterion(int id, std::int64_t nmax, Level level) {
    switch (id) {
    case 1:
        return guarded(1, "oracle-equivalence",
                       [&] { return oracle_equivalence(nmax); });
    case 2:
        return guarded(2, "closed-forms", [&] { return closed_forms(nmax); });
    case 3:
        return guarded(3, "stabilized-degree-pi-n",
                       [&] { return stabilized_degrees(nmax); });
    case 4:
        return guarded(4, "leading-coefficient-equals-volume",
                       [&] { return leading_coefficient_volume(nmax); });
    case 5:
        return guarded(5, "sandwich-inequalities",
                       [&] { return sandwich(nmax); });
    case 6:
        return guarded(6, "simplex-counterexample",
                       [] { return simplex_example(); });
    case 7:
        return guarded(7, "qn-integrally-closed",
                       [&] { return qn_closedness(nmax, level); });
    case 8:
        return guarded(8, "bounds-coherence",
                       [&] { return bounds_coherence(nmax); });
    case 9:
        return guarded(9, "ehrhart-sanity", [&] { return ehrhart_sanity(nmax); });
    default:
        throw std::invalid_argument("run_criterion: unknown id");
    }
}

std::vector<CriterionResult> run_criteria(std::int64_t nmax, Level level) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id)
        out.push_back(run_criterion(id, nmax, level));
    return out;
}

Json criteria_to_json(const std::vector<CriterionResult> &results,
                      std::int64_t nmax, Level level) {
    Json rows = Json::array();
    for (const auto &r : results)
        rows.push_back(Json{{"id", r.id},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail}});
    return Json{{"schema_version", kSchemaVersion},
                {"command", "verify"},
                {"nmax", nmax},
                {"level", level == Level::full ? "full" : "fast"},
                {"criteria", rows},
                {"all_pass", all_pass(results)}};
}

bool all_pass(const std::vector<CriterionResult> &results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CriterionResult &r) { return r.pass; });
}

} // namespace khovlab::verify
