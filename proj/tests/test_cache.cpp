#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "khovlab/cache.hpp"

using namespace khovlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("khovlab-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static inline int counter = 0;
};

} // namespace

TEST_CASE("cache store round-trip") {
    TempDir tmp;
    CacheStore store(tmp.path);
    CHECK_FALSE(store.load(7).has_value());
    Json entry{{"schema_version", kSchemaVersion}, {"n", 7}, {"growth", {1, 7}}};
    store.store(7, entry);
    auto loaded = store.load(7);
    REQUIRE(loaded.has_value());
    CHECK((*loaded)["growth"] == Json({1, 7}));
    // no stray temp files after the atomic publish
    std::size_t files = 0;
    for (auto &e : fs::directory_iterator(tmp.path)) {
        (void)e;
        ++files;
    }
    CHECK(files == 1);
}

TEST_CASE("stale schema versions are ignored") {
    TempDir tmp;
    CacheStore store(tmp.path);
    store.store(3, Json{{"schema_version", kSchemaVersion + 1},
                        {"n", 3},
                        {"growth", {9, 9, 9}}});
    CHECK_FALSE(store.load(3).has_value());

    std::ofstream(tmp.path / "n4.json") << "{ not json";
    CHECK_FALSE(store.load(4).has_value());
}

TEST_CASE("cached growth is served without recomputation") {
    TempDir tmp;
    auto runs = [] {
        return stats::growth_computations.load(std::memory_order_relaxed);
    };

    CachedEngine engine{CacheStore(tmp.path)};
    auto before = runs();
    GrowthSequence first = engine.growth(6, 8);
    CHECK(runs() == before + 1);

    CachedEngine second{CacheStore(tmp.path)};
    GrowthSequence again = second.growth(6, 8);
    CHECK(runs() == before + 1); // cache hit, no new computation
    CHECK(again.values == first.values);

    GrowthSequence shorter = second.growth(6, 5);
    CHECK(runs() == before + 1); // prefix of the cached sequence
    CHECK(shorter.values ==
          std::vector<std::int64_t>(first.values.begin(),
                                    first.values.begin() + 6));

    GrowthSequence longer = second.growth(6, 12);
    CHECK(runs() == before + 2); // must recompute, then store the longer run
    CHECK(std::equal(first.values.begin(), first.values.end(),
                     longer.values.begin()));

    CachedEngine third{CacheStore(tmp.path)};
    GrowthSequence served = third.growth(6, 12);
    CHECK(runs() == before + 2);
    CHECK(served.values == longer.values);
}

TEST_CASE("cached ehrhart round-trips exactly") {
    TempDir tmp;
    CachedEngine engine{CacheStore(tmp.path)};
    EhrhartResult fresh = engine.ehrhart_of_mn(6);
    CachedEngine reload{CacheStore(tmp.path)};
    EhrhartResult cached = reload.ehrhart_of_mn(6);
    CHECK(cached.counts == fresh.counts);
    CHECK(cached.polynomial == fresh.polynomial);
    CHECK(cached.volume == fresh.volume);
}

TEST_CASE("cached threshold report is served verbatim") {
    TempDir tmp;
    CachedEngine engine{CacheStore(tmp.path)};
    Json first = engine.threshold_doc(5, 12);
    auto before = stats::growth_computations.load();
    CachedEngine again{CacheStore(tmp.path)};
    Json served = again.threshold_doc(5, 12);
    CHECK(stats::growth_computations.load() == before); // no recomputation
    CHECK(served == first);

    Json other = again.threshold_doc(5, 13); // different kmax: fresh report
    CHECK(other["kmax"] == 13);
    CHECK(stats::growth_computations.load() == before + 1);
}

TEST_CASE("uncached engine always computes") {
    CachedEngine engine;
    auto before = stats::growth_computations.load();
    engine.growth(4, 4);
    engine.growth(4, 4);
    CHECK(stats::growth_computations.load() == before + 2);
}
