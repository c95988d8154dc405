#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "khovlab/json_io.hpp"

namespace khovlab {

namespace stats {
/// Incremented once per computed (not cache-served) incremental sumset pass;
/// tests use it to prove cache hits trigger no recomputation.
extern std::atomic<std::uint64_t> growth_computations;
} // namespace stats

/// One JSON document per n under the cache directory, written atomically
/// (temp file + rename). Entries whose schema_version differs are ignored,
/// never migrated.
class CacheStore {
  public:
    explicit CacheStore(std::filesystem::path dir);

    std::optional<Json> load(std::int64_t n) const;
    void store(std::int64_t n, const Json &entry) const;

    const std::filesystem::path &dir() const { return dir_; }

  private:
    std::filesystem::path path_for(std::int64_t n) const;
    std::filesystem::path dir_;
};

/// Growth/Ehrhart front end with an optional cache underneath. Cached growth
/// sequences are reused whenever they are long enough; shorter ones are
/// recomputed in full and the longer sequence stored back.
class CachedEngine {
  public:
    CachedEngine() = default; // no cache
    explicit CachedEngine(CacheStore store) : store_(std::move(store)) {}

    GrowthSequence growth(std::int64_t n, std::int64_t kmax);
    EhrhartResult ehrhart_of_mn(std::int64_t n);

    /// Threshold report document for (n, kmax); served verbatim from the
    /// cache when one with the same kmax is stored.
    Json threshold_doc(std::int64_t n, std::int64_t kmax);

    bool has_cache() const { return store_.has_value(); }

  private:
    std::optional<Json> entry_for(std::int64_t n) const;
    void merge_into_entry(std::int64_t n, const char *key, Json value) const;

    std::optional<CacheStore> store_;
};

} // namespace khovlab
