#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mp/monomial.hpp"
#include "mp/simplicial.hpp"

namespace mp {

using Edge = std::pair<int, int>;

/// Finite simple graph on vertices 0..n-1 (variables x1..xn externally).
///
/// Induced subgraphs remember, per vertex, the index it had in the graph they
/// were cut from (`labels()`), so ideals can be placed back in the ambient ring.
class SimpleGraph {
public:
    explicit SimpleGraph(int n = 0);
    static SimpleGraph from_edges(int n, std::span<const Edge> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    VarMask neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    std::span<const VarMask> adjacency() const noexcept { return adj_; }
    /// Original vertex index of each vertex.
    std::span<const int> labels() const noexcept { return labels_; }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    int edge_count() const;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    VarMask vertex_mask() const noexcept;
    bool has_isolated_vertices() const;

    /// Same vertex count and adjacency; labels are ignored.
    bool operator==(const SimpleGraph& other) const { return adj_ == other.adj_; }

    friend SimpleGraph induced_subgraph(const SimpleGraph& g, VarMask keep);

private:
    std::vector<VarMask> adj_;
    std::vector<int> labels_;
};

/// A set of pairwise disjoint edges.
struct Matching {
    std::vector<Edge> edges;
    std::size_t size() const noexcept { return edges.size(); }
    VarMask vertices() const noexcept;
};

SimpleGraph induced_subgraph(const SimpleGraph& g, VarMask keep);
SimpleGraph delete_vertices(const SimpleGraph& g, VarMask removed);
/// G minus N_G[x].
SimpleGraph closed_neighborhood_deletion(const SimpleGraph& g, int x);
/// Components in order of their smallest vertex; labels point into `g`'s labels.
std::vector<SimpleGraph> connected_components(const SimpleGraph& g);
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// I(G) in n variables. Throws InvalidInput if G has an isolated vertex.
MonomialIdeal edge_ideal(const SimpleGraph& g);
/// I(G) placed in a ring of `nvars` variables through `g.labels()`;
/// isolated vertices are allowed.
MonomialIdeal edge_ideal_in(const SimpleGraph& g, int nvars);

int matching_number(const SimpleGraph& g);
Matching maximum_matching(const SimpleGraph& g);
int induced_matching_number(const SimpleGraph& g);
std::vector<Matching> perfect_matchings(const SimpleGraph& g);
bool has_perfect_matching(const SimpleGraph& g);
/// G has a perfect matching, or every G minus one vertex does.
bool tutte_condition(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_forest(const SimpleGraph& g);
bool is_complete(const SimpleGraph& g);
/// Unmixed with cover number |V|/2. Throws InvalidInput on isolated vertices.
bool is_very_well_covered(const SimpleGraph& g);
/// Connected with ν(G) = im(G).
bool is_cameron_walker(const SimpleGraph& g);
/// At least one triangle, all sharing one common vertex and nothing else.
bool is_star_triangle(const SimpleGraph& g);
/// G is H with one pendant edge attached to every vertex of some graph H.
bool is_whisker_graph(const SimpleGraph& g);

SimpleGraph whisker(const SimpleGraph& g);
SimpleGraph generate_star_triangle(int triangles);
SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);

/// Brute force over vertex subsets; independent of the ideal-side search.
std::vector<VarMask> minimal_vertex_covers(const SimpleGraph& g);

SimplicialComplex clique_complex(const SimpleGraph& g);

// --- canonical forms, enumeration, I/O -----------------------------------

inline constexpr int kMaxEnumerationOrder = 8;

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Throws Unsupported above kMaxEnumerationOrder vertices.
SimpleGraph canonical_graph(const SimpleGraph& g);
/// graph6 text of canonical_graph(g).
std::string canonical_form(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// One canonical representative per isomorphism class on n vertices, sorted
/// by canonical form. Uses edge-subset enumeration up to 6 vertices and
/// canonical edge augmentation above.
std::vector<SimpleGraph> enumerate_graphs(int n, bool no_isolated);
/// Edge-subset enumeration with canonical deduplication, n <= 6.
std::vector<SimpleGraph> enumerate_graphs_by_subsets(int n, bool no_isolated);
/// Level-by-level canonical edge augmentation, n <= 8.
std::vector<SimpleGraph> enumerate_graphs_by_augmentation(int n, bool no_isolated);

/// graph6 parse; throws ParseError with the byte offset.
SimpleGraph parse_graph6(std::string_view text);
std::string emit_graph6(const SimpleGraph& g);

/// Edge-list text: first line `n <count>`, then `u v` per line, 1-indexed.
SimpleGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const SimpleGraph& g);

// --- very well-covered labelings -----------------------------------------

/// Pairing (x_i, y_i), i = 1..n, of the vertices of a very well-covered graph.
struct VwcLabeling {
    std::vector<Edge> pairs;
};

struct VwcConditions {
    bool cover = false;         // X minimal vertex cover, Y maximal independent set
    bool matched = false;       // x_i y_i is an edge
    bool upper = false;         // x_i y_j an edge implies i <= j
    bool no_triangle = false;   // x_i y_j an edge implies x_i x_j is not
    bool transitive = false;    // z_i x_j, y_j x_k edges imply z_i x_k
    bool all() const noexcept { return cover && matched && upper && no_triangle && transitive; }
};

VwcConditions check_vwc_labeling(const SimpleGraph& g, const VwcLabeling& labeling);

/// Searches perfect matchings, orientations and orders for a labeling with
/// all five conditions. Throws InvalidInput unless g is very well-covered.
std::optional<VwcLabeling> vwc_cm_labeling_search(const SimpleGraph& g);

}  // namespace mp
