#include "mp/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mp/error.hpp"

namespace mp {

namespace {

VarMask bit(int v) { return VarMask{1} << v; }

void check_vertex(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SimpleGraph::SimpleGraph(int n) {
    if (n < 0 || n > kMaxVars) throw Unsupported("graphs are limited to 64 vertices");
    adj_.assign(static_cast<std::size_t>(n), 0);
    labels_.resize(static_cast<std::size_t>(n));
    std::iota(labels_.begin(), labels_.end(), 0);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const Edge> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(*this, u);
    check_vertex(*this, v);
    return (adj_[static_cast<std::size_t>(u)] >> v & 1u) != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    if (u == v) throw InvalidInput("loops are not allowed in a simple graph");
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(*this, u);
    check_vertex(*this, v);
    adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

int SimpleGraph::degree(int v) const { return std::popcount(neighbors(v)); }

int SimpleGraph::edge_count() const {
    int total = 0;
    for (VarMask m : adj_) total += std::popcount(m);
    return total / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
        for (VarMask rest = adj_[static_cast<std::size_t>(u)] & ~((bit(u) << 1) - 1); rest != 0; rest &= rest - 1) {
            out.emplace_back(u, std::countr_zero(rest));
        }
    }
    return out;
}

VarMask SimpleGraph::vertex_mask() const noexcept {
    return order() >= 64 ? ~VarMask{0} : bit(order()) - 1;
}

bool SimpleGraph::has_isolated_vertices() const {
    return std::any_of(adj_.begin(), adj_.end(), [](VarMask m) { return m == 0; });
}

VarMask Matching::vertices() const noexcept {
    VarMask m = 0;
    for (auto [u, v] : edges) m |= bit(u) | bit(v);
    return m;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, VarMask keep) {
    keep &= g.vertex_mask();
    const auto kept = mask_vertices(keep);
    SimpleGraph out(static_cast<int>(kept.size()));
    std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        position[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
        out.labels_[i] = g.labels_[static_cast<std::size_t>(kept[i])];
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (VarMask rest = g.neighbors(kept[i]) & keep; rest != 0; rest &= rest - 1) {
            out.adj_[i] |= bit(position[static_cast<std::size_t>(std::countr_zero(rest))]);
        }
    }
    return out;
}

SimpleGraph delete_vertices(const SimpleGraph& g, VarMask removed) {
    if ((removed & ~g.vertex_mask()) != 0) throw InvalidInput("deleted vertex set is not a subset of V(G)");
    return induced_subgraph(g, g.vertex_mask() & ~removed);
}

SimpleGraph closed_neighborhood_deletion(const SimpleGraph& g, int x) {
    check_vertex(g, x);
    return delete_vertices(g, g.neighbors(x) | bit(x));
}

std::vector<SimpleGraph> connected_components(const SimpleGraph& g) {
    std::vector<SimpleGraph> out;
    VarMask unseen = g.vertex_mask();
    while (unseen != 0) {
        VarMask component = unseen & (~unseen + 1);
        VarMask frontier = component;
        while (frontier != 0) {
            VarMask next = 0;
            for (VarMask rest = frontier; rest != 0; rest &= rest - 1) next |= g.neighbors(std::countr_zero(rest));
            frontier = next & ~component;
            component |= next;
        }
        out.push_back(induced_subgraph(g, component));
        unseen &= ~component;
    }
    return out;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph out(a.order() + b.order());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
    return out;
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
    if (g.has_isolated_vertices()) throw InvalidInput("edge_ideal: graph has an isolated vertex");
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges()) gens.push_back(Monomial::from_support(bit(u) | bit(v), g.order()));
    return minimalize(std::move(gens), g.order());
}

MonomialIdeal edge_ideal_in(const SimpleGraph& g, int nvars) {
    std::vector<Monomial> gens;
    const auto labels = g.labels();
    for (auto [u, v] : g.edges()) {
        const int a = labels[static_cast<std::size_t>(u)], b = labels[static_cast<std::size_t>(v)];
        if (a >= nvars || b >= nvars) throw InvalidInput("vertex label outside the ambient ring");
        gens.push_back(Monomial::from_support(bit(a) | bit(b), nvars));
    }
    return minimalize(std::move(gens), nvars);
}

// --- matchings ------------------------------------------------------------

namespace {

struct MatchingSearch {
    const SimpleGraph& g;
    std::vector<Edge> current;
    std::vector<Edge> best;

    void run(VarMask available) {
        // Only vertices with an available neighbour can still be matched.
        VarMask live = 0;
        for (VarMask rest = available; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((g.neighbors(v) & available) != 0) live |= bit(v);
        }
        if (current.size() > best.size()) best = current;
        if (current.size() + static_cast<std::size_t>(std::popcount(live)) / 2 <= best.size()) return;
        const int v = std::countr_zero(live);
        for (VarMask rest = g.neighbors(v) & live; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            current.emplace_back(v, u);
            run(live & ~(bit(v) | bit(u)));
            current.pop_back();
        }
        run(live & ~bit(v));
    }
};

int induced_search(const SimpleGraph& g, VarMask available, int current, int best) {
    VarMask live = 0;
    for (VarMask rest = available; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if ((g.neighbors(v) & available) != 0) live |= bit(v);
    }
    best = std::max(best, current);
    if (current + std::popcount(live) / 2 <= best) return best;
    const int v = std::countr_zero(live);
    for (VarMask rest = g.neighbors(v) & live; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        const VarMask blocked = g.neighbors(v) | g.neighbors(u) | bit(v) | bit(u);
        best = induced_search(g, live & ~blocked, current + 1, best);
    }
    return induced_search(g, live & ~bit(v), current, best);
}

void perfect_search(const SimpleGraph& g, VarMask unmatched, std::vector<Edge>& current, std::vector<Matching>& out) {
    if (unmatched == 0) {
        out.push_back({current});
        return;
    }
    const int v = std::countr_zero(unmatched);
    for (VarMask rest = g.neighbors(v) & unmatched; rest != 0; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        current.emplace_back(v, u);
        perfect_search(g, unmatched & ~(bit(v) | bit(u)), current, out);
        current.pop_back();
    }
}

}  // namespace

Matching maximum_matching(const SimpleGraph& g) {
    MatchingSearch search{g, {}, {}};
    search.run(g.vertex_mask());
    return {search.best};
}

int matching_number(const SimpleGraph& g) {
    return static_cast<int>(maximum_matching(g).size());
}

int induced_matching_number(const SimpleGraph& g) {
    return induced_search(g, g.vertex_mask(), 0, 0);
}

std::vector<Matching> perfect_matchings(const SimpleGraph& g) {
    std::vector<Matching> out;
    if (g.order() % 2 != 0) return out;
    std::vector<Edge> current;
    perfect_search(g, g.vertex_mask(), current, out);
    return out;
}

bool has_perfect_matching(const SimpleGraph& g) {
    return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

bool tutte_condition(const SimpleGraph& g) {
    if (has_perfect_matching(g)) return true;
    if (g.order() == 0) return true;
    for (int v = 0; v < g.order(); ++v) {
        if (!has_perfect_matching(delete_vertices(g, bit(v)))) return false;
    }
    return true;
}

// --- structural predicates ----------------------------------------------

bool is_connected(const SimpleGraph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_chordal(const SimpleGraph& g) {
    // Maximum cardinality search; the graph is chordal iff the previously
    // visited neighbours of every vertex form a clique.
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VarMask visited = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if ((visited >> v & 1u) != 0) continue;
            if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
        }
        const VarMask earlier = g.neighbors(pick) & visited;
        for (VarMask rest = earlier; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((earlier & ~bit(u) & ~g.neighbors(u)) != 0) return false;
        }
        visited |= bit(pick);
        for (VarMask rest = g.neighbors(pick) & ~visited; rest != 0; rest &= rest - 1) {
            ++weight[static_cast<std::size_t>(std::countr_zero(rest))];
        }
    }
    return true;
}

bool is_bipartite(const SimpleGraph& g) {
    for (const auto& component : connected_components(g)) {
        VarMask side[2] = {1, 0};
        VarMask frontier = 1;
        int parity = 0;
        while (frontier != 0) {
            VarMask next = 0;
            for (VarMask rest = frontier; rest != 0; rest &= rest - 1) next |= component.neighbors(std::countr_zero(rest));
            if ((next & side[parity]) != 0) return false;
            parity ^= 1;
            next &= ~side[parity];
            side[parity] |= next;
            frontier = next;
        }
    }
    return true;
}

bool is_forest(const SimpleGraph& g) {
    return g.edge_count() == g.order() - static_cast<int>(connected_components(g).size());
}

bool is_complete(const SimpleGraph& g) {
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbors(v) != (g.vertex_mask() & ~bit(v))) return false;
    }
    return true;
}

bool is_very_well_covered(const SimpleGraph& g) {
    const MonomialIdeal ideal = edge_ideal(g);
    if (g.order() % 2 != 0 || ideal.is_zero()) return false;
    const auto primes = minimal_primes(ideal);
    return std::all_of(primes.begin(), primes.end(),
                       [&](const PrimeSupport& p) { return 2 * p.size() == g.order(); });
}

bool is_cameron_walker(const SimpleGraph& g) {
    return g.edge_count() > 0 && is_connected(g) && matching_number(g) == induced_matching_number(g);
}

bool is_star_triangle(const SimpleGraph& g) {
    const int n = g.order();
    if (n < 3 || n % 2 == 0) return false;
    const int triangles = (n - 1) / 2;
    if (g.edge_count() != 3 * triangles) return false;
    for (int c = 0; c < n; ++c) {
        if (g.degree(c) != n - 1) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (v == c) continue;
            if (g.degree(v) != 2) ok = false;
        }
        // Each non-centre vertex has the centre and one partner; with the
        // edge count fixed, the partners pair up into triangles.
        if (ok) return true;
    }
    return false;
}

bool is_whisker_graph(const SimpleGraph& g) {
    if (g.order() == 0) return false;
    for (const auto& m : perfect_matchings(g)) {
        const bool pendant = std::all_of(m.edges.begin(), m.edges.end(), [&](const Edge& e) {
            return g.degree(e.first) == 1 || g.degree(e.second) == 1;
        });
        if (pendant) return true;
    }
    return false;
}

SimpleGraph whisker(const SimpleGraph& g) {
    const int n = g.order();
    SimpleGraph out(2 * n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < n; ++v) out.add_edge(v, n + v);
    return out;
}

SimpleGraph generate_star_triangle(int triangles) {
    if (triangles < 1) throw InvalidInput("a star triangle needs at least one triangle");
    SimpleGraph out(2 * triangles + 1);
    for (int t = 0; t < triangles; ++t) {
        const int a = 1 + 2 * t, b = 2 + 2 * t;
        out.add_edge(0, a);
        out.add_edge(0, b);
        out.add_edge(a, b);
    }
    return out;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph out(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) out.add_edge(u, v);
    }
    return out;
}

SimpleGraph path_graph(int n) {
    SimpleGraph out(n);
    for (int v = 0; v + 1 < n; ++v) out.add_edge(v, v + 1);
    return out;
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("a cycle needs at least 3 vertices");
    SimpleGraph out = path_graph(n);
    out.add_edge(n - 1, 0);
    return out;
}

std::vector<VarMask> minimal_vertex_covers(const SimpleGraph& g) {
    const int n = g.order();
    if (n > 24) throw Unsupported("brute-force vertex covers are limited to 24 vertices");
    const auto edges = g.edges();
    auto covers = [&](VarMask c) {
        return std::all_of(edges.begin(), edges.end(),
                           [&](const Edge& e) { return (c & (bit(e.first) | bit(e.second))) != 0; });
    };
    std::vector<VarMask> out;
    for (VarMask c = 0; c < (VarMask{1} << n); ++c) {
        if (!covers(c)) continue;
        bool minimal = true;
        for (VarMask rest = c; rest != 0 && minimal; rest &= rest - 1) {
            if (covers(c & ~(rest & (~rest + 1)))) minimal = false;
        }
        if (minimal) out.push_back(c);
    }
    return out;
}

SimplicialComplex clique_complex(const SimpleGraph& g) {
    return clique_complex(g.order(), g.adjacency());
}

}  // namespace mp
