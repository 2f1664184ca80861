#include <functional>
#include <queue>

#include "mp/error.hpp"
#include "mp/graph.hpp"

namespace mp {

namespace {

VarMask bit(int v) { return VarMask{1} << v; }

// Pairs as (x, y) vertex arrays; conditions that do not depend on the order.
bool no_triangle_holds(const SimpleGraph& g, const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && g.has_edge(x[i], y[j]) && g.has_edge(x[i], x[j])) return false;
        }
    }
    return true;
}

bool transitive_holds(const SimpleGraph& g, const std::vector<int>& x, const std::vector<int>& y) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (int z : {x[i], y[i]}) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || !g.has_edge(z, x[j])) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == i || k == j) continue;
                    if (g.has_edge(y[j], x[k]) && !g.has_edge(z, x[k])) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

VwcConditions check_vwc_labeling(const SimpleGraph& g, const VwcLabeling& labeling) {
    const std::size_t n = labeling.pairs.size();
    if (static_cast<int>(2 * n) != g.order()) throw InvalidInput("labeling must pair up all vertices");
    std::vector<int> x(n), y(n);
    VarMask seen = 0, xs = 0, ys = 0;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = labeling.pairs[i].first;
        y[i] = labeling.pairs[i].second;
        for (int v : {x[i], y[i]}) {
            if (v < 0 || v >= g.order() || (seen & bit(v)) != 0) throw InvalidInput("labeling must pair up all vertices");
            seen |= bit(v);
        }
        xs |= bit(x[i]);
        ys |= bit(y[i]);
    }

    VwcConditions c;
    // X is a minimal cover iff Y is independent and every x has a neighbour in Y,
    // which is also exactly maximality of Y.
    c.cover = true;
    for (std::size_t i = 0; i < n; ++i) {
        if ((g.neighbors(y[i]) & ys) != 0 || (g.neighbors(x[i]) & ys) == 0) c.cover = false;
    }
    c.matched = true;
    for (std::size_t i = 0; i < n; ++i) c.matched = c.matched && g.has_edge(x[i], y[i]);
    c.upper = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (g.has_edge(x[i], y[j])) c.upper = false;
        }
    }
    c.no_triangle = no_triangle_holds(g, x, y);
    c.transitive = transitive_holds(g, x, y);
    return c;
}

std::optional<VwcLabeling> vwc_cm_labeling_search(const SimpleGraph& g) {
    if (g.has_isolated_vertices() || !is_very_well_covered(g)) {
        throw InvalidInput("labeling search requires a very well-covered graph");
    }
    const int n = g.order() / 2;
    for (const Matching& m : perfect_matchings(g)) {
        for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
            std::vector<int> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
            VarMask ys = 0;
            for (int i = 0; i < n; ++i) {
                auto [a, b] = m.edges[static_cast<std::size_t>(i)];
                if (flips >> i & 1u) std::swap(a, b);
                x[static_cast<std::size_t>(i)] = a;
                y[static_cast<std::size_t>(i)] = b;
                ys |= bit(b);
            }
            bool independent = true;
            for (int v : y) independent = independent && (g.neighbors(v) & ys) == 0;
            if (!independent) continue;
            if (!no_triangle_holds(g, x, y) || !transitive_holds(g, x, y)) continue;

            // x_a y_b with a != b forces a before b.
            std::vector<std::vector<int>> after(static_cast<std::size_t>(n));
            std::vector<int> indegree(static_cast<std::size_t>(n), 0);
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (a != b && g.has_edge(x[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(b)])) {
                        after[static_cast<std::size_t>(a)].push_back(b);
                        ++indegree[static_cast<std::size_t>(b)];
                    }
                }
            }
            std::priority_queue<int, std::vector<int>, std::greater<>> ready;
            for (int a = 0; a < n; ++a) {
                if (indegree[static_cast<std::size_t>(a)] == 0) ready.push(a);
            }
            VwcLabeling labeling;
            while (!ready.empty()) {
                const int a = ready.top();
                ready.pop();
                labeling.pairs.emplace_back(x[static_cast<std::size_t>(a)], y[static_cast<std::size_t>(a)]);
                for (int b : after[static_cast<std::size_t>(a)]) {
                    if (--indegree[static_cast<std::size_t>(b)] == 0) ready.push(b);
                }
            }
            if (static_cast<int>(labeling.pairs.size()) != n) continue;
            if (check_vwc_labeling(g, labeling).all()) return labeling;
        }
    }
    return std::nullopt;
}

}  // namespace mp
