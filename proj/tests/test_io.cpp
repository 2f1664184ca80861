#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "mp/cache.hpp"
#include "mp/error.hpp"
#include "mp/graph.hpp"
#include "mp/serialize.hpp"
#include "mp/theorems.hpp"
#include "oracles.hpp"

using namespace mp;
namespace fs = std::filesystem;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() / ("mp-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::size_t json_files(const fs::path& dir) {
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        n += (e.path().extension() == ".json" && e.path().filename() != "manifest.json") ? 1 : 0;
    }
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("Betti tables survive a JSON round-trip") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        const auto i = trial % 2 ? oracle::random_squarefree_ideal(rng, 2 + trial % 6, 6)
                                 : oracle::random_ideal(rng, 2 + trial % 4, 4, 3, 5);
        if (i.is_unit()) continue;
        const FieldSpec f = trial % 3 ? Q : FieldSpec::prime(3);
        const auto t = betti_table(i, f);
        REQUIRE(betti_from_json(betti_to_json(t)) == t);
    }
    const auto text = betti_to_json(betti_table(edge_ideal(path_graph(4)), Q));
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["schema"] == 1);
    CHECK(doc["field"] == "q");
}

TEST_CASE("summaries and classification records round-trip") {
    const auto s = summary(edge_ideal(cycle_graph(5)), FieldSpec::prime(2));
    CHECK(summary_from_json(summary_to_json(s)) == s);

    const auto records = classify_all(5, Q);
    const auto text = records_to_json(records, Q);
    CHECK(records_from_json(text) == records);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc["schema"] == 1);
    CHECK(doc["records"].size() == 3);
    CHECK(doc["records"][0]["per_k"][0].contains("equals_veronese"));
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(betti_from_json("{"), ParseError);
    CHECK_THROWS_AS(betti_from_json(R"({"schema": 2, "field": "q", "graded": [], "multigraded": null})"), ParseError);
    CHECK_THROWS_AS(betti_from_json(R"({"schema": 1, "field": "q"})"), ParseError);
    CHECK_THROWS_AS(summary_from_json(R"({"schema": 1, "nvars": "x"})"), ParseError);
    CHECK_THROWS_AS(records_from_json("[]"), ParseError);
}

TEST_CASE("verification reports serialize with witnesses and findings") {
    VerificationReport r;
    r.id = "hereditary";
    r.corpus = "test";
    r.instances = 3;
    r.failures.push_back(Witness{"C~", 2, 1, "q", "both sides"});
    r.findings.push_back(Witness{"CK", std::nullopt, std::nullopt, "q", "outside hypothesis"});
    r.notes.push_back("note");
    const auto doc = nlohmann::json::parse(report_to_json(r));
    CHECK(doc["schema"] == 1);
    CHECK(doc["theorem"] == "hereditary");
    CHECK(doc["passed"] == false);
    CHECK(doc["failures"][0]["x"] == 1);
    CHECK(doc["findings"][0]["k"].is_null());
    CHECK(doc["notes"][0] == "note");
}

TEST_CASE("disk cache stores, verifies keys and honours the format version") {
    TempDir tmp;
    const auto ideal = edge_ideal(cycle_graph(6));
    const auto table = betti_table(ideal, Q);
    const std::string key = BettiCache::key(ideal, Q);
    {
        DiskCache cache(tmp.path);
        CHECK(fs::exists(tmp.path / "manifest.json"));
        CHECK_FALSE(cache.load(key).has_value());
        cache.save(key, table, summary(ideal, Q));
        REQUIRE(cache.load(key).has_value());
        CHECK(*cache.load(key) == table);
        CHECK(json_files(tmp.path) == 1);

        // A file at the right name but for another key is ignored.
        const std::string other = BettiCache::key(edge_ideal(cycle_graph(5)), Q);
        fs::copy_file(cache.entry_path(key), cache.entry_path(other));
        CHECK_FALSE(cache.load(other).has_value());
        std::ofstream(cache.entry_path(other)) << "not json";
        CHECK_FALSE(cache.load(other).has_value());
    }
    {
        DiskCache again(tmp.path);
        CHECK(again.load(key).has_value());
    }
    std::ofstream(tmp.path / "manifest.json") << R"({"tool": "mp", "format": 0})";
    DiskCache purged(tmp.path);
    CHECK(json_files(tmp.path) == 0);
    CHECK_FALSE(purged.load(key).has_value());
}

TEST_CASE("the memo reads through a disk store") {
    TempDir tmp;
    auto& memo = BettiCache::instance();
    const auto ideal = edge_ideal(whisker(cycle_graph(4)));
    const auto fresh = betti_table(ideal, Q);
    memo.clear();
    memo.set_store(std::make_shared<DiskCache>(tmp.path));
    const auto first = betti_table(ideal, Q);
    CHECK(json_files(tmp.path) == 1);
    memo.clear();
    const auto second = betti_table(ideal, Q);
    memo.set_store(nullptr);
    CHECK(first == fresh);
    CHECK(second == fresh);
}

TEST_CASE("cache directory from the environment") {
    ::setenv("MP_CACHE_DIR", "/tmp/somewhere", 1);
    CHECK(DiskCache::from_environment() == fs::path("/tmp/somewhere"));
    ::setenv("MP_CACHE_DIR", "", 1);
    CHECK_FALSE(DiskCache::from_environment().has_value());
    ::unsetenv("MP_CACHE_DIR");
    CHECK_FALSE(DiskCache::from_environment().has_value());
}

}  // TEST_SUITE
