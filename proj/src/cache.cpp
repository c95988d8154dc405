#include "khovlab/cache.hpp"

#include <fstream>
#include <random>
#include <system_error>

#include "khovlab/errors.hpp"
#include "khovlab/lattice.hpp"
#include "khovlab/polytope.hpp"

namespace khovlab {

namespace stats {
std::atomic<std::uint64_t> growth_computations{0};
} // namespace stats

CacheStore::CacheStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::filesystem::path CacheStore::path_for(std::int64_t n) const {
    return dir_ / ("n" + std::to_string(n) + ".json");
}

std::optional<Json> CacheStore::load(std::int64_t n) const {
    std::ifstream in(path_for(n));
    if (!in)
        return std::nullopt;
    Json j = Json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        return std::nullopt; // unreadable cache is treated as absent
    if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion)
        return std::nullopt; // stale schema: ignore, never migrate
    return j;
}

void CacheStore::store(std::int64_t n, const Json &entry) const {
    const auto target = path_for(n);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::random_device{}());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw guard_error("cache: cannot write " + tmp.string());
        out << entry.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, target); // atomic publish
}

std::optional<Json> CachedEngine::entry_for(std::int64_t n) const {
    if (!store_)
        return std::nullopt;
    return store_->load(n);
}

void CachedEngine::merge_into_entry(std::int64_t n, const char *key,
                                    Json value) const {
    if (!store_)
        return;
    Json entry = store_->load(n).value_or(
        Json{{"schema_version", kSchemaVersion}, {"n", n}});
    entry[key] = std::move(value);
    store_->store(n, entry);
}

GrowthSequence CachedEngine::growth(std::int64_t n, std::int64_t kmax) {
    if (auto entry = entry_for(n)) {
        if (entry->contains("growth")) {
            const auto &vals = (*entry)["growth"];
            if (static_cast<std::int64_t>(vals.size()) >= kmax + 1) {
                GrowthSequence seq;
                seq.n = n;
                for (std::int64_t k = 0; k <= kmax; ++k)
                    seq.values.push_back(
                        vals[static_cast<std::size_t>(k)].get<std::int64_t>());
                return seq;
            }
        }
    }
    stats::growth_computations.fetch_add(1, std::memory_order_relaxed);
    GrowthSequence seq = growth_sequence(build_mn(n), kmax);
    seq.n = n;
    merge_into_entry(n, "growth", Json(seq.values));
    return seq;
}

Json CachedEngine::threshold_doc(std::int64_t n, std::int64_t kmax) {
    if (auto entry = entry_for(n)) {
        if (entry->contains("threshold") &&
            (*entry)["threshold"].value("kmax", std::int64_t{-1}) == kmax)
            return (*entry)["threshold"];
    }
    GrowthSequence seq = growth(n, kmax);
    Json doc = to_json(threshold_report_from(n, seq, ehrhart_of_mn(n).volume));
    merge_into_entry(n, "threshold", doc);
    return doc;
}

EhrhartResult CachedEngine::ehrhart_of_mn(std::int64_t n) {
    if (auto entry = entry_for(n)) {
        if (entry->contains("ehrhart")) {
            const Json &e = (*entry)["ehrhart"];
            EhrhartResult res;
            for (const auto &c : e.at("counts"))
                res.counts.push_back(c.get<std::int64_t>());
            std::vector<Rational> coeffs;
            for (const auto &c : e.at("polynomial").at("coefficients"))
                coeffs.push_back(rational_from_json(c));
            res.polynomial = RationalPolynomial(std::move(coeffs));
            res.volume = rational_from_json(e.at("volume"));
            return res;
        }
    }
    EhrhartResult res = ehrhart(qn_spec(n));
    merge_into_entry(n, "ehrhart", to_json(res));
    return res;
}

} // namespace khovlab
