#include "mp/theorems.hpp"

#include <unordered_set>

#include "checked.hpp"
#include "mp/error.hpp"

namespace mp {

namespace {

struct PropertyState {
    std::mutex mutex;
    PropertyStats stats;
    std::unordered_set<std::string> seen;
};

PropertyState& property_state() {
    static PropertyState state;
    return state;
}

}  // namespace

PropertyStats property_stats() {
    auto& state = property_state();
    std::lock_guard lock(state.mutex);
    return state.stats;
}

void reset_property_stats() {
    auto& state = property_state();
    std::lock_guard lock(state.mutex);
    state.stats = PropertyStats{};
    state.seen.clear();
}

namespace detail {

std::string graph_name(const SimpleGraph& g) {
    return g.order() <= kMaxEnumerationOrder ? canonical_form(g) : emit_graph6(g);
}

HomologicalSummary checked_summary(const MonomialIdeal& ideal, const FieldSpec& field, const std::string& graph6,
                                   std::optional<int> k) {
    const HomologicalSummary s = summary(ideal, field);
    auto& state = property_state();
    {
        std::lock_guard lock(state.mutex);
        if (!state.seen.insert(BettiCache::key(ideal, field)).second) return s;
    }

    PropertyStats local;
    auto violation = [&](std::string detail) {
        local.violations.push_back(Witness{graph6, k, std::nullopt, field.name(), std::move(detail)});
    };

    const int depth = depth_by_local_cohomology(ideal, field);
    ++local.auslander_buchsbaum;
    if (depth + s.pdim != s.nvars) {
        violation("Auslander-Buchsbaum: local cohomology depth " + std::to_string(depth) + " + pdim " +
                  std::to_string(s.pdim) + " != " + std::to_string(s.nvars));
    }

    if (!ideal.is_zero()) {
        ++local.big_cosize;
        const int bound = big_cosize(ideal);
        if (s.pdim > bound) {
            violation("pdim " + std::to_string(s.pdim) + " exceeds big-cosize " + std::to_string(bound));
        }
    }

    if (s.is_cm && !ideal.is_zero()) {
        for (int v = 0; v < ideal.nvars(); ++v) {
            const Monomial u = Monomial::from_support(VarMask{1} << v, ideal.nvars());
            if (ideal.contains(u)) continue;
            const HomologicalSummary t = summary(colon(ideal, u), field);
            ++local.colon_stability;
            if (!t.is_cm || t.depth != s.depth) {
                violation("colon by x" + std::to_string(v + 1) + ": depth " + std::to_string(t.depth) + " vs " +
                          std::to_string(s.depth) + (t.is_cm ? "" : ", not CM"));
            }
        }
    }

    std::lock_guard lock(state.mutex);
    state.stats.auslander_buchsbaum += local.auslander_buchsbaum;
    state.stats.big_cosize += local.big_cosize;
    state.stats.colon_stability += local.colon_stability;
    for (auto& w : local.violations) state.stats.violations.push_back(std::move(w));
    return s;
}

void check_matching_number(const SimpleGraph& g, const std::string& graph6) {
    const int graph_side = matching_number(g);
    const int ideal_side = monomial_grade(edge_ideal_in(g, g.order()));
    auto& state = property_state();
    std::lock_guard lock(state.mutex);
    ++state.stats.matching_number;
    if (graph_side != ideal_side) {
        state.stats.violations.push_back(Witness{graph6, std::nullopt, std::nullopt, "",
                                                 "matching number " + std::to_string(graph_side) +
                                                     " != monomial grade " + std::to_string(ideal_side)});
    }
}

}  // namespace detail

ClassificationRecord classify_graph(const SimpleGraph& g, const FieldSpec& field) {
    const MonomialIdeal ideal = edge_ideal(g);
    ClassificationRecord record;
    record.graph6 = detail::graph_name(g);
    record.n = g.order();
    record.nu = matching_number(g);
    record.field = field;
    detail::check_matching_number(g, record.graph6);

    record.all_powers_cm = true;
    for (int k = 1; k <= record.nu; ++k) {
        const MonomialIdeal power = matching_power(ideal, k);
        const HomologicalSummary s = detail::checked_summary(power, field, record.graph6, k);
        PowerRecord row;
        row.k = k;
        row.generators = power.size();
        row.height = s.height;
        row.dim = s.dim;
        row.depth = s.depth;
        row.pdim = s.pdim;
        row.is_cm = s.is_cm;
        row.equals_veronese = 2 * k <= record.n && power == squarefree_veronese(record.n, 2 * k);
        record.all_powers_cm = record.all_powers_cm && s.is_cm;
        record.per_k.push_back(row);
    }

    auto& tags = record.tags;
    tags.complete = is_complete(g);
    tags.forest = is_forest(g);
    tags.cm_forest = tags.forest && !record.per_k.empty() && record.per_k.front().is_cm;
    tags.chordal = is_chordal(g);
    tags.bipartite = is_bipartite(g);
    tags.very_well_covered = is_very_well_covered(g);
    tags.cameron_walker = is_cameron_walker(g);
    tags.whisker_shape = is_whisker_graph(g);
    return record;
}

std::vector<ClassificationRecord> classify_all(int n, const FieldSpec& field, int jobs) {
    if (n < 2 || n > kMaxEnumerationOrder) {
        throw Unsupported("classification is supported for 2 <= n <= " + std::to_string(kMaxEnumerationOrder));
    }
    const auto graphs = enumerate_graphs(n, true);
    auto results = parallel_map<std::optional<ClassificationRecord>>(
        graphs.size(), jobs, [&](std::size_t i) -> std::optional<ClassificationRecord> {
            const SimpleGraph& g = graphs[i];
            const std::string name = detail::graph_name(g);
            detail::check_matching_number(g, name);
            // Cheap rejection: the last power and I(G) itself fail most often.
            const MonomialIdeal ideal = edge_ideal(g);
            const int nu = matching_number(g);
            std::vector<int> order{nu};
            for (int k = 1; k < nu; ++k) order.push_back(k);
            for (int k : order) {
                if (!detail::checked_summary(matching_power(ideal, k), field, name, k).is_cm) return std::nullopt;
            }
            return classify_graph(g, field);
        });
    std::vector<ClassificationRecord> out;
    for (auto& r : results) {
        if (r && r->all_powers_cm) out.push_back(std::move(*r));
    }
    std::sort(out.begin(), out.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) { return a.graph6 < b.graph6; });
    return out;
}

bool depth_lower_bound_check(const SimpleGraph& g, int k, const FieldSpec& field) {
    const int nu = matching_number(g);
    if (k < 1 || k > nu) throw InvalidInput("k must lie in 1..ν(G)");
    const MonomialIdeal power = matching_power(edge_ideal_in(g, g.order()), k);
    return detail::checked_summary(power, field, detail::graph_name(g), k).depth >= 2 * k - 1;
}

std::vector<SimpleGraph> graph_corpus(int n_min, int n_max, const std::function<bool(const SimpleGraph&)>& keep) {
    std::vector<SimpleGraph> out;
    for (int n = std::max(n_min, 2); n <= n_max; ++n) {
        for (auto& g : enumerate_graphs(n, true)) {
            if (!keep || keep(g)) out.push_back(g);
        }
    }
    return out;
}

SimpleGraph vwc_example_graph() {
    const std::vector<Edge> edges{{0, 4}, {1, 5}, {2, 6}, {3, 7}, {2, 7}, {0, 1},
                                  {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    return SimpleGraph::from_edges(8, edges);
}

VwcLabeling vwc_example_labeling() {
    return VwcLabeling{{{0, 4}, {1, 5}, {2, 6}, {3, 7}}};
}

}  // namespace mp
