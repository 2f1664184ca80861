#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "mp/error.hpp"
#include "mp/graph.hpp"

namespace mp {

namespace {

VarMask bit(int v) { return VarMask{1} << v; }

/// Colour refinement starting from degrees. Colours are ranks of
/// isomorphism-invariant signatures, so the result is itself invariant.
std::vector<int> refined_colours(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& sig = signature[static_cast<std::size_t>(v)];
            sig.push_back(colour[static_cast<std::size_t>(v)]);
            std::vector<int> around;
            for (VarMask rest = g.neighbors(v); rest != 0; rest &= rest - 1) {
                around.push_back(colour[static_cast<std::size_t>(std::countr_zero(rest))]);
            }
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
        }
        auto distinct = signature;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v) {
            colour[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) - distinct.begin());
        }
        const int now = static_cast<int>(distinct.size());
        if (now == classes) break;
        classes = now;
    }
    return colour;
}

/// Searches colour-respecting orderings for the lexicographically smallest
/// graph6 bit sequence (column j holds adjacency to positions 0..j-1).
class CanonicalSearch {
public:
    explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.order()) {
        const auto colour = refined_colours(g);
        std::vector<int> order(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)];
        });
        cell_at_.resize(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) {
            const int c = colour[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
            cell_at_[static_cast<std::size_t>(p)] = 0;
            for (int v = 0; v < n_; ++v) {
                if (colour[static_cast<std::size_t>(v)] == c) cell_at_[static_cast<std::size_t>(p)] |= bit(v);
            }
        }
        perm_.resize(static_cast<std::size_t>(n_));
        cols_.resize(static_cast<std::size_t>(n_));
    }

    std::vector<int> run() {
        search(0, 0);
        return best_perm_;
    }

private:
    // <0 if the current prefix 0..p is smaller than the best's, 0 if equal.
    int compare_prefix(int p) const {
        for (int q = 0; q <= p; ++q) {
            const VarMask a = cols_[static_cast<std::size_t>(q)], b = best_cols_[static_cast<std::size_t>(q)];
            if (a == b) continue;
            const VarMask low = (a ^ b) & (~(a ^ b) + 1);
            return (a & low) != 0 ? 1 : -1;
        }
        return 0;
    }

    void search(int p, VarMask used) {
        if (p == n_) {
            if (best_perm_.empty() || compare_prefix(n_ - 1) < 0) {
                best_perm_ = perm_;
                best_cols_ = cols_;
            }
            return;
        }
        for (VarMask rest = cell_at_[static_cast<std::size_t>(p)] & ~used; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            VarMask col = 0;
            for (int q = 0; q < p; ++q) {
                if (g_.has_edge(v, perm_[static_cast<std::size_t>(q)])) col |= bit(q);
            }
            perm_[static_cast<std::size_t>(p)] = v;
            cols_[static_cast<std::size_t>(p)] = col;
            if (!best_perm_.empty() && compare_prefix(p) > 0) continue;
            search(p + 1, used | bit(v));
        }
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<VarMask> cell_at_;
    std::vector<int> perm_;
    std::vector<VarMask> cols_;
    std::vector<int> best_perm_;
    std::vector<VarMask> best_cols_;
};

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& position_to_vertex) {
    const int n = g.order();
    std::vector<int> where(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) where[static_cast<std::size_t>(position_to_vertex[static_cast<std::size_t>(p)])] = p;
    SimpleGraph out(n);
    for (auto [u, v] : g.edges()) out.add_edge(where[static_cast<std::size_t>(u)], where[static_cast<std::size_t>(v)]);
    return out;
}

void check_order(int n, int limit) {
    if (n < 0) throw InvalidInput("negative vertex count");
    if (n > limit) {
        throw Unsupported("graph enumeration and canonical forms are limited to " + std::to_string(limit) +
                          " vertices, got " + std::to_string(n));
    }
}

std::vector<SimpleGraph> sorted_by_form(std::map<std::string, SimpleGraph> classes, bool no_isolated) {
    std::vector<SimpleGraph> out;
    for (auto& [form, graph] : classes) {
        if (no_isolated && graph.has_isolated_vertices()) continue;
        out.push_back(std::move(graph));
    }
    return out;
}

}  // namespace

SimpleGraph canonical_graph(const SimpleGraph& g) {
    check_order(g.order(), kMaxEnumerationOrder);
    if (g.order() == 0) return g;
    return relabel(g, CanonicalSearch(g).run());
}

std::string canonical_form(const SimpleGraph& g) {
    return emit_graph6(canonical_graph(g));
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

std::vector<SimpleGraph> enumerate_graphs_by_subsets(int n, bool no_isolated) {
    check_order(n, 6);
    std::vector<Edge> slots;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
    }
    std::map<std::string, SimpleGraph> classes;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t subset = 0; subset < total; ++subset) {
        SimpleGraph g(n);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (subset >> s & 1u) g.add_edge(slots[s].first, slots[s].second);
        }
        if (no_isolated && g.has_isolated_vertices()) continue;
        SimpleGraph canon = canonical_graph(g);
        classes.try_emplace(emit_graph6(canon), std::move(canon));
    }
    return sorted_by_form(std::move(classes), no_isolated);
}

std::vector<SimpleGraph> enumerate_graphs_by_augmentation(int n, bool no_isolated) {
    check_order(n, kMaxEnumerationOrder);
    std::map<std::string, SimpleGraph> all;
    std::map<std::string, SimpleGraph> level;
    SimpleGraph empty(n);
    level.emplace(emit_graph6(empty), empty);
    while (!level.empty()) {
        std::map<std::string, SimpleGraph> next;
        for (const auto& [form, g] : level) {
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u) {
                    if (g.has_edge(u, v)) continue;
                    SimpleGraph h = g;
                    h.add_edge(u, v);
                    SimpleGraph canon = canonical_graph(h);
                    std::string key = emit_graph6(canon);
                    if (!next.contains(key)) next.emplace(std::move(key), std::move(canon));
                }
            }
        }
        all.merge(level);
        level = std::move(next);
    }
    return sorted_by_form(std::move(all), no_isolated);
}

std::vector<SimpleGraph> enumerate_graphs(int n, bool no_isolated) {
    check_order(n, kMaxEnumerationOrder);
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::vector<SimpleGraph>> memo;
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find({n, no_isolated}); it != memo.end()) return it->second;
    }
    auto graphs = n <= 6 ? enumerate_graphs_by_subsets(n, no_isolated) : enumerate_graphs_by_augmentation(n, no_isolated);
    std::lock_guard lock(mutex);
    memo.try_emplace({n, no_isolated}, graphs);
    return graphs;
}

}  // namespace mp
