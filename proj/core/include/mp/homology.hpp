#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mp/field.hpp"
#include "mp/monomial.hpp"
#include "mp/simplicial.hpp"

namespace mp {

/// Ranks of reduced homology H̃_d for d = -1..dim; element 0 is H̃_{-1}.
/// The void complex yields an empty vector.
std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field);

/// depth S/I from the nonvanishing of local cohomology (Hochster's formula
/// over links), polarizing first when needed. Independent of Betti tables.
int depth_by_local_cohomology(const MonomialIdeal& ideal, const FieldSpec& field);

/// Graded Betti numbers β_{i,j}(S/I) over a field.
class BettiTable {
public:
    using Graded = std::map<std::pair<int, int>, std::uint64_t>;
    using Multigraded = std::map<std::pair<int, VarMask>, std::uint64_t>;

    BettiTable() = default;
    explicit BettiTable(FieldSpec field) : field_(field) {}

    const FieldSpec& field() const noexcept { return field_; }
    const Graded& graded() const noexcept { return graded_; }
    /// Present for squarefree inputs: (i, σ) -> β_{i,σ}.
    const std::optional<Multigraded>& multigraded() const noexcept { return multigraded_; }

    std::uint64_t at(int i, int j) const;
    /// Sum over j of β_{i,j}.
    std::uint64_t total(int i) const;
    /// Largest i with a nonzero β_{i,·}.
    int projective_dimension() const;

    /// Adds `value` to β_{i,j}; zero values are not stored.
    void add(int i, int j, std::uint64_t value);
    void add_multigraded(int i, VarMask sigma, std::uint64_t value);
    void enable_multigraded() { if (!multigraded_) multigraded_.emplace(); }

    bool operator==(const BettiTable&) const = default;

private:
    FieldSpec field_;
    Graded graded_;
    std::optional<Multigraded> multigraded_;
};

/// Betti numbers of S/I through Hochster's formula on the Stanley-Reisner
/// complex. Throws InvalidInput unless I is squarefree and not the unit
/// ideal; Unsupported beyond 24 variables.
BettiTable betti_table_hochster(const MonomialIdeal& ideal, const FieldSpec& field);

/// Betti numbers of S/I as Koszul homology, multidegree by multidegree.
/// Valid for any non-unit monomial ideal; independent of the Hochster route.
BettiTable betti_table_koszul(const MonomialIdeal& ideal, const FieldSpec& field);

/// Depth, dimension and Cohen-Macaulayness of S/I.
struct HomologicalSummary {
    int nvars = 0;
    int height = 0;
    int dim = 0;
    int depth = 0;
    int pdim = 0;
    bool is_cm = false;
    FieldSpec field;

    bool operator==(const HomologicalSummary&) const = default;
};

/// Graded Betti table of S/I by the Hochster engine, polarizing first when I
/// is not squarefree. Memoized per (ideal, field).
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field);

HomologicalSummary summary(const MonomialIdeal& ideal, const FieldSpec& field);

inline bool is_cohen_macaulay(const MonomialIdeal& ideal, const FieldSpec& field) {
    return summary(ideal, field).is_cm;
}

/// True iff β_{i,j}(S/I) = 0 for i >= 1 and j != d + i - 1. Throws
/// InvalidInput when the table's first syzygies are not all in degree d.
bool has_linear_resolution(const BettiTable& table, int generation_degree);

/// g_I(k) = depth S/I^[k] - (α(I^[k]) - 1) for k = 1..ν(I); element 0 is k = 1.
std::vector<int> normalized_depth_function(const MonomialIdeal& ideal, const FieldSpec& field);

/// Betti numbers of the ideal I itself, β_{i,j}(I) = β_{i+1,j}(S/I).
/// The zero ideal has none.
BettiTable::Graded ideal_betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field);

/// Optional persistent backing for the in-process memo.
class BettiStore {
public:
    virtual ~BettiStore() = default;
    virtual std::optional<BettiTable> load(const std::string& key) = 0;
    virtual void save(const std::string& key, const BettiTable& table, const HomologicalSummary& summary) = 0;
};

/// Process-wide memo of Betti tables keyed by canonical ideal text and field.
/// Concurrent readers; writers serialize.
class BettiCache {
public:
    static BettiCache& instance();

    static std::string key(const MonomialIdeal& ideal, const FieldSpec& field);

    std::optional<BettiTable> find(const std::string& key) const;
    void insert(const std::string& key, const BettiTable& table);

    void set_store(std::shared_ptr<BettiStore> store);
    std::shared_ptr<BettiStore> store() const;

    void set_enabled(bool enabled);
    bool enabled() const;
    void clear();
    std::size_t size() const;

private:
    BettiCache() = default;

    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, BettiTable> tables_;
    std::shared_ptr<BettiStore> store_;
    bool enabled_ = true;
};

}  // namespace mp
