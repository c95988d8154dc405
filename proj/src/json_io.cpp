#include "khovlab/json_io.hpp"

namespace khovlab {

Json to_json(const BigInt &z) { return z.get_str(); }

Json to_json(const Rational &q) {
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Json to_json(const RationalInterval &iv) {
    return Json{{"lo", to_json(iv.lo)},
                {"hi", to_json(iv.hi)},
                {"bits", iv.bits}};
}

Json to_json(const PointSet &set) {
    Json points = Json::array();
    for (std::size_t i = 0; i < set.size(); ++i) {
        Json p = Json::array();
        for (Coord c : set.point(i))
            p.push_back(c);
        points.push_back(std::move(p));
    }
    return points;
}

Json to_json(const RationalPolynomial &poly) {
    Json coeffs = Json::array();
    for (const Rational &c : poly.coefficients())
        coeffs.push_back(to_json(c));
    return Json{{"coefficients", coeffs},
                {"degree", poly.degree()},
                {"text", poly.to_string()}};
}

Json to_json(const GrowthSequence &seq) {
    Json j;
    if (seq.n)
        j["n"] = *seq.n;
    j["values"] = seq.values;
    return j;
}

Json to_json(const EhrhartResult &ehr) {
    return Json{{"counts", ehr.counts},
                {"polynomial", to_json(ehr.polynomial)},
                {"volume", to_json(ehr.volume)}};
}

Json to_json(const StabilizationResult &stab) {
    Json binomial = Json::array();
    for (const Rational &c : stab.binomial_coefficients())
        binomial.push_back(to_json(c));
    return Json{{"threshold", stab.threshold},
                {"confirmed_upto", stab.confirmed_upto},
                {"polynomial", to_json(stab.polynomial)},
                {"binomial_coefficients", binomial}};
}

Json to_json(const ClosednessReport &report) {
    Json rows = Json::array();
    for (const auto &row : report.rows) {
        rows.push_back(Json{{"k", row.k},
                            {"star_size", row.star_size},
                            {"dilation_size", row.dilation_size},
                            {"closed", row.closed},
                            {"witness_total", row.witness_total},
                            {"witnesses", to_json(row.witnesses)}});
    }
    return Json{{"rows", rows}, {"all_closed", report.all_closed}};
}

Json to_json(const std::vector<SandwichRow> &rows) {
    Json out = Json::array();
    for (const auto &row : rows) {
        out.push_back(Json{{"k", row.k},
                           {"p_k", row.p_k},
                           {"ehrhart_k", row.ehrhart_k},
                           {"p_k_plus_d", row.p_k_plus_d},
                           {"ok", row.ok}});
    }
    return out;
}

Json to_json(const ThresholdReport &report) {
    Json j;
    j["n"] = report.n;
    j["d"] = report.d;
    j["kmax"] = report.kmax;
    j["gsw_exact"] = to_json(report.gsw_exact);
    j["explicit_bound"] = to_json(report.explicit_bound);
    j["explicit_ceil"] = to_json(report.explicit_ceil);
    j["volume"] = to_json(report.volume);
    j["volume_bound"] = to_json(report.volume_bound);
    if (report.stabilization) {
        j["empirical"] = to_json(*report.stabilization);
    } else {
        j["empirical"] = nullptr;
        j["flags"] = Json::array({"empirical-unavailable"});
    }
    j["verdicts"] = Json{
        {"gsw_le_explicit", report.gsw_le_explicit},
        {"volume_le_bound", report.volume_le_bound},
        {"empirical_le_explicit_ceil",
         report.empirical_le_explicit_ceil
             ? Json(*report.empirical_le_explicit_ceil)
             : Json(nullptr)}};
    return j;
}

Rational rational_from_json(const Json &j) {
    BigInt num(j.at("num").get<std::string>());
    BigInt den(j.at("den").get<std::string>());
    return make_rational(num, den);
}

} // namespace khovlab
