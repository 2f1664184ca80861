#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mp/homology.hpp"

namespace mp {

/// Persistent Betti store: one JSON file per key under a directory, named by
/// a hash of the key, holding the full key so collisions are detected. A
/// manifest records the format version; a mismatch empties the directory.
/// Files are written to a temporary name and renamed into place.
class DiskCache : public BettiStore {
public:
    static constexpr int kFormatVersion = 1;

    explicit DiskCache(std::filesystem::path dir);

    std::optional<BettiTable> load(const std::string& key) override;
    void save(const std::string& key, const BettiTable& table, const HomologicalSummary& summary) override;

    const std::filesystem::path& directory() const noexcept { return dir_; }
    std::filesystem::path entry_path(const std::string& key) const;

    /// Directory from MP_CACHE_DIR, if set and nonempty.
    static std::optional<std::filesystem::path> from_environment();

private:
    std::filesystem::path dir_;
};

}  // namespace mp
