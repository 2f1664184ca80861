#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "mp/field.hpp"
#include "mp/graph.hpp"
#include "mp/homology.hpp"

namespace mp {

// --- classification ---------------------------------------------------------

struct PowerRecord {
    int k = 0;
    std::size_t generators = 0;
    int height = 0;
    int dim = 0;
    int depth = 0;
    int pdim = 0;
    bool is_cm = false;
    /// I^[k] equals the squarefree Veronese ideal m^[2k].
    bool equals_veronese = false;

    bool operator==(const PowerRecord&) const = default;
};

struct GraphTags {
    bool complete = false;
    bool forest = false;
    bool cm_forest = false;
    bool chordal = false;
    bool bipartite = false;
    bool very_well_covered = false;
    bool cameron_walker = false;
    bool whisker_shape = false;

    bool operator==(const GraphTags&) const = default;
};

struct ClassificationRecord {
    std::string graph6;
    int n = 0;
    int nu = 0;
    std::vector<PowerRecord> per_k;
    bool all_powers_cm = false;
    GraphTags tags;
    FieldSpec field;

    bool operator==(const ClassificationRecord&) const = default;
};

/// Every matching power of I(G) with its invariants, plus the family tags.
/// Throws InvalidInput when G has isolated vertices.
ClassificationRecord classify_graph(const SimpleGraph& g, const FieldSpec& field);

/// Records with all_powers_cm for every graph on n vertices without isolated
/// vertices, sorted by canonical graph6. jobs = 0 picks the hardware count.
std::vector<ClassificationRecord> classify_all(int n, const FieldSpec& field, int jobs = 0);

/// depth S/I(G)^[k] >= 2k - 1.
bool depth_lower_bound_check(const SimpleGraph& g, int k, const FieldSpec& field = FieldSpec{});

// --- verification -----------------------------------------------------------

struct Witness {
    std::string graph6;
    std::optional<int> k;
    std::optional<int> x;  // 1-based vertex
    std::string field;
    std::string detail;

    bool operator==(const Witness&) const = default;
};

struct VerificationReport {
    std::string id;
    std::string corpus;
    std::uint64_t instances = 0;
    std::vector<Witness> failures;
    /// Cases outside a statement's hypotheses where its conclusion does not hold.
    std::vector<Witness> findings;
    std::vector<std::string> notes;
    double elapsed_seconds = 0.0;

    bool passed() const noexcept { return failures.empty(); }
    void merge(VerificationReport other);
};

// Corpus-based suites take a worker count; 0 picks the hardware count.

/// CM of I^[ν] <=> Veronese with ν = floor(n/2) <=> tutte_condition.
VerificationReport verify_last_power_theorem(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs = 0);
/// The colon decomposition by x, its Betti additivity and the depth inequality.
/// x is 0-based.
VerificationReport verify_betti_splitting(const SimpleGraph& g, int k, int x, const FieldSpec& field);
VerificationReport verify_hereditary(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs = 0);
/// Expects graphs with a perfect matching; others are skipped.
VerificationReport verify_dim_bounds(std::span<const SimpleGraph> corpus, int jobs = 0);
VerificationReport verify_perfect_matching_theorem(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs = 0);
/// Very well-covered members get the full suite; bipartite and whisker members
/// get their corollaries. The 8-vertex worked example is always included.
VerificationReport verify_vwc(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs = 0);
VerificationReport verify_chordal(int n_max, const FieldSpec& field, int jobs = 0);
VerificationReport verify_cameron_walker(int n_max, const FieldSpec& field, int jobs = 0);
VerificationReport verify_field_independence(int n_max, int jobs = 0);

/// The 8-vertex very well-covered example: x1..x4 are vertices 0..3,
/// y1..y4 are vertices 4..7.
SimpleGraph vwc_example_graph();
/// The labeling x_i = i - 1, y_i = i + 3 of vwc_example_graph().
VwcLabeling vwc_example_labeling();

struct VerifyOptions {
    int max_n = 6;
    /// Empty means the theorem's default (Q, plus GF(2) for betti-splitting).
    std::vector<FieldSpec> fields;
    int jobs = 0;
    /// Random sample at n = max_n + 1 for last-power; 0 disables it.
    int sample_size = 0;
    std::uint64_t seed = 20240611;
};

/// Fixed theorem ids accepted by run_verification.
std::span<const std::string> theorem_ids();

/// Runs one theorem suite over its standard corpus up to opts.max_n.
/// Throws InvalidInput on an unknown id.
VerificationReport run_verification(const std::string& id, const VerifyOptions& opts);

/// Graphs on 2..n_max vertices without isolated vertices satisfying `keep`.
std::vector<SimpleGraph> graph_corpus(int n_min, int n_max, const std::function<bool(const SimpleGraph&)>& keep = {});

// --- property bookkeeping ---------------------------------------------------

/// Counters for the per-instance property checks run by every verifier and
/// by classify_all: Auslander-Buchsbaum against an independent depth, colon
/// stability on CM instances, pdim <= big-cosize, and ν(I(G)) = ν(G).
struct PropertyStats {
    std::uint64_t auslander_buchsbaum = 0;
    std::uint64_t colon_stability = 0;
    std::uint64_t big_cosize = 0;
    std::uint64_t matching_number = 0;
    std::vector<Witness> violations;
};

PropertyStats property_stats();
void reset_property_stats();

// --- work pool --------------------------------------------------------------

inline int resolve_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Applies fn to 0..count-1 on `jobs` workers claiming indices from a shared
/// counter. Results keep input order; the first exception is rethrown.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn) {
    std::vector<std::optional<T>> slots(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
            }
        }
    };
    const int workers = std::max(1, std::min(resolve_jobs(jobs), static_cast<int>(count)));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (error) std::rethrow_exception(error);
    std::vector<T> out;
    out.reserve(count);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace mp
