#include "mp/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mp/error.hpp"
#include "mp/serialize.hpp"

namespace mp {

namespace fs = std::filesystem;

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_atomically(const fs::path& path, const std::string& content) {
    static std::atomic<std::uint64_t> counter{0};
    const auto tag = std::hash<std::thread::id>{}(std::this_thread::get_id()) ^ counter.fetch_add(1);
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(tag);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot rename cache file into " + path.string());
    }
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    const fs::path manifest = dir_ / "manifest.json";
    bool current = false;
    if (auto text = read_file(manifest)) {
        const Json doc = Json::parse(*text, nullptr, false);
        current = doc.is_object() && doc.value("format", -1) == kFormatVersion;
    }
    if (!current) {
        for (const auto& entry : fs::directory_iterator(dir_)) {
            if (entry.path().extension() == ".json" && entry.path().filename() != "manifest.json") {
                fs::remove(entry.path());
            }
        }
        write_atomically(manifest, Json{{"tool", "mp"}, {"format", kFormatVersion}}.dump(2) + "\n");
    }
}

fs::path DiskCache::entry_path(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
    return dir_ / name;
}

std::optional<BettiTable> DiskCache::load(const std::string& key) {
    const auto text = read_file(entry_path(key));
    if (!text) return std::nullopt;
    const Json doc = Json::parse(*text, nullptr, false);
    if (!doc.is_object() || doc.value("format", -1) != kFormatVersion || doc.value("key", "") != key ||
        !doc.contains("betti")) {
        return std::nullopt;
    }
    try {
        return betti_from_json(doc["betti"].dump());
    } catch (const ParseError&) {
        return std::nullopt;
    }
}

void DiskCache::save(const std::string& key, const BettiTable& table, const HomologicalSummary& summary) {
    Json doc{{"format", kFormatVersion},
             {"key", key},
             {"betti", Json::parse(betti_to_json(table))},
             {"summary", Json::parse(summary_to_json(summary))}};
    write_atomically(entry_path(key), doc.dump() + "\n");
}

std::optional<fs::path> DiskCache::from_environment() {
    const char* value = std::getenv("MP_CACHE_DIR");
    if (value == nullptr || *value == '\0') return std::nullopt;
    return fs::path(value);
}

}  // namespace mp
