#include "mp/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mp/error.hpp"

namespace mp {

namespace {

VarMask full_mask(int n) {
    return n >= 64 ? ~VarMask{0} : (VarMask{1} << n) - 1;
}

// (size, lexicographic on sorted vertex lists)
bool facet_less(VarMask a, VarMask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // The lexicographically smaller list has the smaller first differing vertex.
    const VarMask diff = a ^ b;
    if (diff == 0) return false;
    const VarMask low = diff & (~diff + 1);
    return (a & low) != 0;
}

std::vector<VarMask> maximal_sets(std::vector<VarMask> sets) {
    std::sort(sets.begin(), sets.end(), [](VarMask a, VarMask b) {
        return std::popcount(a) > std::popcount(b);
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarMask> out;
    for (VarMask s : sets) {
        bool contained = std::any_of(out.begin(), out.end(), [&](VarMask f) { return (s & ~f) == 0; });
        if (!contained) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), facet_less);
    return out;
}

}  // namespace

std::vector<int> mask_vertices(VarMask mask) {
    std::vector<int> out;
    while (mask != 0) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

SimplicialComplex::SimplicialComplex(int nverts, std::vector<VarMask> facets) : nverts_(nverts) {
    if (nverts < 0 || nverts > kMaxVars) throw InvalidInput("bad vertex count");
    for (VarMask f : facets) {
        if ((f & ~full_mask(nverts)) != 0) throw InvalidInput("facet uses a vertex out of range");
    }
    facets_ = maximal_sets(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(int nverts) {
    return SimplicialComplex(nverts, {full_mask(nverts)});
}

int SimplicialComplex::dimension() const noexcept {
    if (facets_.empty()) return -2;
    int best = 0;
    for (VarMask f : facets_) best = std::max(best, std::popcount(f));
    return best - 1;
}

bool SimplicialComplex::contains_face(VarMask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(), [&](VarMask f) { return (face & ~f) == 0; });
}

std::vector<VarMask> SimplicialComplex::faces() const {
    std::set<VarMask> seen;
    for (VarMask f : facets_) {
        // All submasks of f, including f and 0.
        VarMask sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<VarMask> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(), [](VarMask a, VarMask b) {
        return std::popcount(a) < std::popcount(b);
    });
    return out;
}

int PrimeSupport::size() const noexcept { return std::popcount(vars); }

// ---------------------------------------------------------------------------

namespace {

struct TransversalSearch {
    std::span<const VarMask> edges;
    std::vector<VarMask> found;

    // True if every vertex of `chosen` meets some edge in no other chosen vertex.
    bool all_private(VarMask chosen) const {
        VarMask has_private = 0;
        for (VarMask e : edges) {
            VarMask hit = e & chosen;
            if (hit != 0 && (hit & (hit - 1)) == 0) has_private |= hit;
        }
        return has_private == chosen;
    }

    void run(VarMask chosen, VarMask forbidden) {
        // Branch on the uncovered edge with the fewest allowed vertices.
        const VarMask* pick = nullptr;
        int best = 65;
        for (const VarMask& e : edges) {
            if ((e & chosen) != 0) continue;
            const int allowed = std::popcount(e & ~forbidden);
            if (allowed < best) {
                best = allowed;
                pick = &e;
            }
        }
        if (pick == nullptr) {
            found.push_back(chosen);
            return;
        }
        if (best == 0) return;
        VarMask options = *pick & ~forbidden;
        VarMask excluded = forbidden;
        while (options != 0) {
            const VarMask v = options & (~options + 1);
            options &= options - 1;
            const VarMask next = chosen | v;
            if (all_private(next)) run(next, excluded);
            excluded |= v;
        }
    }
};

}  // namespace

std::vector<VarMask> minimal_transversals(std::span<const VarMask> edges) {
    if (edges.empty()) return {};
    for (VarMask e : edges) {
        if (e == 0) throw InvalidInput("empty edge has no transversal");
    }
    // Superset edges never constrain a transversal; drop them.
    std::vector<VarMask> minimal;
    for (VarMask e : edges) {
        bool dominated = std::any_of(edges.begin(), edges.end(),
                                     [&](VarMask f) { return f != e && (f & ~e) == 0; });
        if (!dominated) minimal.push_back(e);
    }
    std::sort(minimal.begin(), minimal.end());
    minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
    TransversalSearch search{minimal, {}};
    search.run(0, 0);
    std::sort(search.found.begin(), search.found.end(), facet_less);
    return search.found;
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw InvalidInput("the unit ideal has no minimal primes");
    std::vector<PrimeSupport> out;
    for (VarMask t : minimal_transversals(ideal.support_masks())) out.push_back({t});
    return out;
}

int height(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return 0;
    int best = 65;
    for (const auto& p : minimal_primes(ideal)) best = std::min(best, p.size());
    return best;
}

int krull_dim(const MonomialIdeal& ideal) {
    return ideal.nvars() - height(ideal);
}

bool is_unmixed(const MonomialIdeal& ideal) {
    const auto primes = minimal_primes(ideal);
    return std::all_of(primes.begin(), primes.end(),
                       [&](const PrimeSupport& p) { return p.size() == primes.front().size(); });
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) throw InvalidInput("Stanley-Reisner complex needs a squarefree ideal");
    if (ideal.is_unit()) throw InvalidInput("Stanley-Reisner complex of the unit ideal");
    const int n = ideal.nvars();
    if (ideal.is_zero()) return SimplicialComplex::simplex(n);
    // Facets are the complements of the minimal vertex covers.
    std::vector<VarMask> facets;
    for (const auto& p : minimal_primes(ideal)) facets.push_back(full_mask(n) & ~p.vars);
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarMask vertices) {
    std::vector<VarMask> facets;
    for (VarMask f : complex.facets()) facets.push_back(f & vertices);
    return SimplicialComplex(complex.nverts(), std::move(facets));
}

// ---------------------------------------------------------------------------

namespace {

void bron_kerbosch(std::span<const VarMask> adj, VarMask r, VarMask p, VarMask x, std::vector<VarMask>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    const VarMask px = p | x;
    const int pivot = std::countr_zero(px);
    VarMask candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    while (candidates != 0) {
        const int v = std::countr_zero(candidates);
        const VarMask bit = VarMask{1} << v;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], out);
        p &= ~bit;
        x |= bit;
    }
}

}  // namespace

SimplicialComplex clique_complex(int nverts, std::span<const VarMask> adjacency) {
    if (static_cast<int>(adjacency.size()) != nverts) throw InvalidInput("adjacency size mismatch");
    std::vector<VarMask> cliques;
    if (nverts > 0) bron_kerbosch(adjacency, 0, full_mask(nverts), 0, cliques);
    return SimplicialComplex(nverts, std::move(cliques));
}

std::vector<VarMask> free_vertex_facets(const SimplicialComplex& complex) {
    std::vector<VarMask> out;
    const auto facets = complex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        VarMask others = 0;
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (j != i) others |= facets[j];
        }
        if ((facets[i] & ~others) != 0) out.push_back(facets[i]);
    }
    return out;
}

int free_facet_count(const SimplicialComplex& complex) {
    return static_cast<int>(free_vertex_facets(complex).size());
}

}  // namespace mp
