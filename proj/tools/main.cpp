// khovlab: exact multiplication-table growth, Ehrhart polynomials of the
// exponent polytopes Q_n, integral-closedness certificates and effective
// Khovanskii thresholds. All arithmetic is exact; JSON output is
// byte-reproducible.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "khovlab/bounds.hpp"
#include "khovlab/cache.hpp"
#include "khovlab/errors.hpp"
#include "khovlab/json_io.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/oracle.hpp"
#include "khovlab/polytope.hpp"
#include "khovlab/sumset.hpp"
#include "khovlab/verify.hpp"

namespace {

using namespace khovlab;

struct Options {
    std::string format = "table";
    std::string cache_dir;

    bool json() const { return format == "json"; }
    CachedEngine engine() const {
        if (!cache_dir.empty())
            return CachedEngine(CacheStore(cache_dir));
        if (const char *env = std::getenv("KHOVLAB_CACHE"); env && *env)
            return CachedEngine(CacheStore(env));
        return CachedEngine();
    }
};

void emit(const Json &doc) { std::cout << doc.dump(2) << "\n"; }

std::string vector_text(std::span<const Coord> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string interval_text(const RationalInterval &iv) {
    std::ostringstream os;
    os << "[" << rational_to_decimal(iv.lo, 6) << ", "
       << rational_to_decimal(iv.hi, 6) << "] @" << iv.bits << "b";
    return os.str();
}

int cmd_mn(std::int64_t n, const Options &opt) {
    PrimeBasis basis = primes_upto(n);
    PointSet mn = build_mn(n);
    if (opt.json()) {
        Json points = Json::array();
        for (std::size_t i = 0; i < mn.size(); ++i)
            points.push_back(
                Json{{"value", vector_value(mn.point_vector(i), basis).get_str()},
                     {"vector", Json(mn.point_vector(i))}});
        emit(Json{{"schema_version", kSchemaVersion},
                  {"command", "mn"},
                  {"n", n},
                  {"d", basis.dim()},
                  {"primes", basis.primes},
                  {"points", points}});
        return 0;
    }
    std::cout << "M_" << n << ": " << mn.size() << " exponent vectors over "
              << basis.dim() << " primes\n";
    for (std::size_t i = 0; i < mn.size(); ++i)
        std::cout << std::setw(8)
                  << vector_value(mn.point_vector(i), basis).get_str() << "  "
                  << vector_text(mn.point(i)) << "\n";
    return 0;
}

int cmd_pkn(std::int64_t n, std::int64_t k, const Options &opt) {
    CachedEngine engine = opt.engine();
    GrowthSequence seq = engine.growth(n, k);
    std::int64_t p = seq.values[static_cast<std::size_t>(k)];
    if (opt.json()) {
        emit(Json{{"schema_version", kSchemaVersion},
                  {"command", "pkn"},
                  {"n", n},
                  {"k", k},
                  {"p", p}});
        return 0;
    }
    std::cout << p << "\n";
    return 0;
}

int cmd_sequence(std::int64_t n, std::int64_t kmax, const Options &opt) {
    CachedEngine engine = opt.engine();
    GrowthSequence seq = engine.growth(n, kmax);
    const int d = primes_upto(n).dim();
    Json diffs = Json::array();
    std::vector<std::vector<std::int64_t>> diff_rows;
    for (int order = 1;
         order <= d + 1 && order <= static_cast<int>(seq.values.size()); ++order) {
        auto row = finite_differences(seq.values, order);
        diffs.push_back(Json{{"order", order}, {"values", row}});
        diff_rows.push_back(std::move(row));
    }
    if (opt.json()) {
        emit(Json{{"schema_version", kSchemaVersion},
                  {"command", "sequence"},
                  {"n", n},
                  {"kmax", kmax},
                  {"values", seq.values},
                  {"differences", diffs}});
        return 0;
    }
    std::cout << "p(k," << n << ") for k = 0.." << kmax << ":\n ";
    for (auto v : seq.values)
        std::cout << " " << v;
    std::cout << "\n";
    for (std::size_t i = 0; i < diff_rows.size(); ++i) {
        std::cout << "D^" << (i + 1) << ":";
        for (auto v : diff_rows[i])
            std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_fit(std::int64_t n, std::int64_t kmax, std::optional<int> window,
            const Options &opt) {
    CachedEngine engine = opt.engine();
    GrowthSequence seq = engine.growth(n, kmax);
    const int d = primes_upto(n).dim();
    const int w = window.value_or(d + 2);
    auto stab = detect_stabilization(seq, d, w);
    const char *note = "empirical threshold: agreement beyond confirmed_upto "
                       "is guaranteed only for k0 covered by a proven bound "
                       "(see the threshold command)";
    if (opt.json()) {
        Json j{{"schema_version", kSchemaVersion},
               {"command", "fit"},
               {"n", n},
               {"kmax", kmax},
               {"window", w},
               {"degree_bound", d}};
        j["stabilization"] = stab ? to_json(*stab) : Json(nullptr);
        j["note"] = note;
        emit(j);
        return 0;
    }
    if (!stab) {
        std::cout << "no stabilization within k <= " << kmax << " (window " << w
                  << ")\n";
        return 0;
    }
    std::cout << "q_" << n << "(t) = " << stab->polynomial.to_string() << "\n";
    std::cout << "binomial basis:";
    auto bc = stab->binomial_coefficients();
    for (std::size_t i = 0; i < bc.size(); ++i)
        std::cout << (i ? " + " : " ") << rational_to_string(bc[i]) << "*C(t,"
                  << i << ")";
    std::cout << "\nempirical threshold k0 = " << stab->threshold
              << " (confirmed up to k = " << stab->confirmed_upto << ")\n";
    std::cout << "note: " << note << "\n";
    return 0;
}

int cmd_ehrhart(std::int64_t n, const Options &opt) {
    CachedEngine engine = opt.engine();
    EhrhartResult ehr = engine.ehrhart_of_mn(n);
    if (opt.json()) {
        Json j{{"schema_version", kSchemaVersion},
               {"command", "ehrhart"},
               {"n", n}};
        j.update(to_json(ehr));
        emit(j);
        return 0;
    }
    std::cout << "L(Q_" << n << ", t) = " << ehr.polynomial.to_string() << "\n";
    std::cout << "counts at t = 0..d:";
    for (auto c : ehr.counts)
        std::cout << " " << c;
    std::cout << "\nvolume = " << rational_to_string(ehr.volume) << "\n";
    return 0;
}

int cmd_sandwich(std::int64_t n, std::int64_t kmax, const Options &opt) {
    auto rows = sandwich_check(n, kmax);
    bool all_ok = true;
    for (const auto &row : rows)
        all_ok = all_ok && row.ok;
    if (opt.json()) {
        emit(Json{{"schema_version", kSchemaVersion},
                  {"command", "sandwich"},
                  {"n", n},
                  {"kmax", kmax},
                  {"rows", to_json(rows)},
                  {"all_ok", all_ok}});
        return 0;
    }
    const int d = primes_upto(n).dim();
    std::cout << "k   p(k," << n << ")   L(Q_" << n << ",k)   p(k+" << d << ","
              << n << ")   ok\n";
    for (const auto &row : rows)
        std::cout << std::left << std::setw(4) << row.k << std::setw(9)
                  << row.p_k << std::setw(12) << row.ehrhart_k << std::setw(11)
                  << row.p_k_plus_d << (row.ok ? "yes" : "NO") << "\n";
    return 0;
}

int cmd_closedness(std::optional<std::int64_t> n,
                   const std::string &halfspace, std::optional<std::int64_t> kmax,
                   const Options &opt) {
    HullSpec spec;
    Json source;
    if (n && halfspace.empty()) {
        spec = qn_spec(*n);
        source = Json{{"n", *n}};
    } else if (!n && !halfspace.empty()) {
        // "c1,c2,...,cd:rhs"
        auto colon = halfspace.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--halfspace",
                                       "expected coeffs:rhs, e.g. 6,10,15:30");
        std::vector<std::int64_t> coeffs;
        std::stringstream cs(halfspace.substr(0, colon));
        std::string tok;
        while (std::getline(cs, tok, ','))
            coeffs.push_back(std::stoll(tok));
        std::int64_t rhs = std::stoll(halfspace.substr(colon + 1));
        spec = hull_spec(brute_halfspace_points(coeffs, rhs, 1));
        source = Json{{"halfspace", Json{{"coeffs", coeffs}, {"rhs", rhs}}}};
    } else {
        throw CLI::ValidationError("closedness",
                                   "exactly one of --n / --halfspace required");
    }
    const int d = spec.dim();
    const std::int64_t k = kmax.value_or(std::max(1, d - 1));
    ClosednessReport report = closedness_report(spec, k);
    if (opt.json()) {
        Json j{{"schema_version", kSchemaVersion}, {"command", "closedness"}};
        j.update(source);
        j["kmax"] = k;
        j.update(to_json(report));
        emit(j);
        return 0;
    }
    std::cout << "k   |k*Q|   |int(kQ)|   closed   witnesses\n";
    for (const auto &row : report.rows) {
        std::cout << std::left << std::setw(4) << row.k << std::setw(8)
                  << row.star_size << std::setw(12) << row.dilation_size
                  << std::setw(9) << (row.closed ? "yes" : "NO");
        if (row.witness_total == 0) {
            std::cout << "-\n";
            continue;
        }
        std::cout << row.witness_total << ":";
        for (std::size_t i = 0; i < row.witnesses.size() && i < 5; ++i)
            std::cout << " " << vector_text(row.witnesses.point(i));
        if (static_cast<std::size_t>(row.witness_total) > 5)
            std::cout << " ...";
        std::cout << "\n";
    }
    std::cout << (report.all_closed ? "integrally closed for all tested k"
                                    : "NOT integrally closed")
              << "\n";
    return 0;
}

int cmd_threshold(std::int64_t n, std::optional<std::int64_t> kmax,
                  const Options &opt) {
    CachedEngine engine = opt.engine();
    const int d = primes_upto(n).dim();
    const std::int64_t k = kmax.value_or(2 * d + 8);
    // The report document is what gets cached, so both output formats render
    // from it and cache hits reproduce earlier output byte for byte.
    Json doc = engine.threshold_doc(n, k);
    if (opt.json()) {
        Json j{{"schema_version", kSchemaVersion}, {"command", "threshold"}};
        j.update(doc);
        emit(j);
        return 0;
    }
    auto interval = [&](const Json &j) {
        return interval_text(RationalInterval{rational_from_json(j["lo"]),
                                              rational_from_json(j["hi"]),
                                              j["bits"].get<unsigned>()});
    };
    const Json &verdicts = doc["verdicts"];
    Rational gsw = rational_from_json(doc["gsw_exact"]);
    std::cout << "n = " << n << ", d = pi(n) = " << doc["d"]
              << ", kmax = " << doc["kmax"] << "\n";
    std::cout << "volume Vol(Q_n)        = "
              << rational_to_string(rational_from_json(doc["volume"])) << "\n";
    std::cout << "volume upper bound     = " << interval(doc["volume_bound"])
              << (verdicts["volume_le_bound"].get<bool>()
                      ? "  (volume <= bound ok)"
                      : "  VIOLATED")
              << "\n";
    std::cout << "GSW threshold bound    = " << rational_to_decimal(gsw, 4)
              << " (exact " << rational_to_string(gsw) << ")\n";
    std::cout << "explicit threshold     = " << interval(doc["explicit_bound"])
              << ", integer threshold ceil(hi) = "
              << doc["explicit_ceil"].get<std::string>()
              << (verdicts["gsw_le_explicit"].get<bool>() ? "  (gsw <= bound ok)"
                                                       : "  VIOLATED")
              << "\n";
    if (!doc["empirical"].is_null()) {
        const Json &stab = doc["empirical"];
        std::cout << "empirical threshold    = " << stab["threshold"]
                  << " (confirmed to k = " << stab["confirmed_upto"] << ", "
                  << (verdicts["empirical_le_explicit_ceil"] == Json(true)
                          ? "<= integer threshold ok"
                          : "VIOLATED")
                  << ")\n";
        std::cout << "q_n(t) = "
                  << stab["polynomial"]["text"].get<std::string>() << "\n";
    } else {
        std::cout << "empirical threshold    : unavailable (kmax too small)\n";
    }
    return 0;
}

int cmd_verify(std::int64_t nmax, const std::string &level_name,
               const Options &opt) {
    using namespace khovlab::verify;
    const Level level = level_name == "full" ? Level::full : Level::fast;
    auto results = run_criteria(nmax, level);

    // Determinism criterion: two fresh end-to-end runs must serialize to
    // identical bytes.
    const std::int64_t dn = std::min<std::int64_t>(nmax, 10);
    std::string a = criteria_to_json(run_criteria(dn, Level::fast), dn,
                                     Level::fast)
                        .dump(2);
    std::string b = criteria_to_json(run_criteria(dn, Level::fast), dn,
                                     Level::fast)
                        .dump(2);
    CriterionResult det;
    det.id = 10;
    det.name = "determinism";
    det.pass = (a == b);
    det.detail = det.pass ? "repeated runs byte-identical"
                          : "repeated runs differ";
    results.push_back(det);

    if (opt.json()) {
        emit(criteria_to_json(results, nmax, level));
    } else {
        for (const auto &r : results)
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  "
                      << r.name << " (" << r.detail << ")\n";
        std::cout << (all_pass(results) ? "all criteria passed"
                                        : "FAILURES present")
                  << "\n";
    }
    return all_pass(results) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact multiplication-table counts p(k,n), Ehrhart data of "
                 "the exponent polytope Q_n, integral-closedness reports and "
                 "Khovanskii threshold bounds"};
    app.require_subcommand(1);

    Options opt;
    std::int64_t n = 1, k = 0, kmax = 1, nmax = 10;
    std::optional<int> window;
    std::optional<std::int64_t> opt_kmax, opt_n;
    std::string halfspace, level = "fast";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"table", "json"}))
            ->capture_default_str();
        sub->add_option("--cache", opt.cache_dir,
                        "cache directory (default: $KHOVLAB_CACHE)");
    };

    auto *mn = app.add_subcommand("mn", "list M_n");
    mn->add_option("--n", n, "upper bound n")->required()->check(CLI::PositiveNumber);
    add_common(mn);

    auto *pkn = app.add_subcommand("pkn", "count distinct k-factor products");
    pkn->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    pkn->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    add_common(pkn);

    auto *seq = app.add_subcommand("sequence", "growth sequence p(0..kmax, n)");
    seq->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    seq->add_option("--kmax", kmax)->required()->check(CLI::NonNegativeNumber);
    add_common(seq);

    auto *fit = app.add_subcommand("fit", "detect polynomial stabilization");
    fit->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    fit->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
    fit->add_option("--window", window, "confirmation window (default d+2)")
        ->check(CLI::PositiveNumber);
    add_common(fit);

    auto *ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of Q_n");
    ehr->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    add_common(ehr);

    auto *sand = app.add_subcommand("sandwich",
                                    "p(k,n) <= L(Q_n,k) <= p(k+d,n) table");
    sand->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    sand->add_option("--kmax", kmax)->required()->check(CLI::PositiveNumber);
    add_common(sand);

    auto *clos = app.add_subcommand("closedness", "k*Q vs int(kQ) with witnesses");
    clos->add_option("--n", opt_n)->check(CLI::PositiveNumber);
    clos->add_option("--halfspace", halfspace,
                     "polytope {x >= 0, sum c_i x_i <= rhs} as c1,...,cd:rhs");
    clos->add_option("--kmax", opt_kmax)->check(CLI::PositiveNumber);
    add_common(clos);

    auto *thr = app.add_subcommand("threshold", "threshold and bound report");
    thr->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    thr->add_option("--kmax", opt_kmax)->check(CLI::PositiveNumber);
    add_common(thr);

    auto *ver = app.add_subcommand("verify", "run the verification suite");
    ver->add_option("--nmax", nmax)->check(CLI::PositiveNumber)
        ->capture_default_str();
    ver->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}))
        ->capture_default_str();
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mn->parsed())
            return cmd_mn(n, opt);
        if (pkn->parsed())
            return cmd_pkn(n, k, opt);
        if (seq->parsed())
            return cmd_sequence(n, kmax, opt);
        if (fit->parsed())
            return cmd_fit(n, kmax, window, opt);
        if (ehr->parsed())
            return cmd_ehrhart(n, opt);
        if (sand->parsed())
            return cmd_sandwich(n, kmax, opt);
        if (clos->parsed())
            return cmd_closedness(opt_n, halfspace, opt_kmax, opt);
        if (thr->parsed())
            return cmd_threshold(n, opt_kmax, opt);
        if (ver->parsed())
            return cmd_verify(nmax, level, opt);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const guard_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument &e) {
        // precondition violations from flag values (window too large, ...)
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
