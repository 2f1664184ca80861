#pragma once

#include <span>
#include <vector>

#include "mp/monomial.hpp"

namespace mp {

/// A simplicial complex on vertices 0..nverts-1, stored by its facets.
///
/// A complex with no facets is the void complex (no faces at all); the
/// complex whose only facet is the empty set is the empty complex {∅}.
class SimplicialComplex {
public:
    explicit SimplicialComplex(int nverts = 0) : nverts_(nverts) {}
    /// Drops facets contained in others; sorts by (size, lexicographic).
    SimplicialComplex(int nverts, std::vector<VarMask> facets);

    static SimplicialComplex void_complex(int nverts) { return SimplicialComplex(nverts); }
    static SimplicialComplex empty_complex(int nverts) { return SimplicialComplex(nverts, {VarMask{0}}); }
    static SimplicialComplex simplex(int nverts);

    int nverts() const noexcept { return nverts_; }
    std::span<const VarMask> facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    /// -1 for the empty complex; -2 for the void complex.
    int dimension() const noexcept;

    bool contains_face(VarMask face) const noexcept;
    /// Every face, each exactly once, ordered by (size, mask).
    std::vector<VarMask> faces() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    int nverts_;
    std::vector<VarMask> facets_;
};

/// Vertex list of a mask, ascending.
std::vector<int> mask_vertices(VarMask mask);

/// Faces are the vertex sets containing no generator support.
/// Throws InvalidInput for non-squarefree or unit ideals.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, VarMask vertices);

/// Monomial prime generated by the variables in `vars`.
struct PrimeSupport {
    VarMask vars = 0;
    int size() const noexcept;
    bool operator==(const PrimeSupport&) const = default;
};

/// Minimal monomial primes: inclusion-minimal variable sets meeting every
/// generator support, sorted by (size, lexicographic). Empty for the zero
/// ideal. Throws InvalidInput for the unit ideal.
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);

/// Minimal transversals of a set system over at most 64 points.
std::vector<VarMask> minimal_transversals(std::span<const VarMask> edges);

int height(const MonomialIdeal& ideal);
/// Krull dimension of S/I.
int krull_dim(const MonomialIdeal& ideal);
bool is_unmixed(const MonomialIdeal& ideal);

/// Clique complex of the graph with the given neighbour masks.
SimplicialComplex clique_complex(int nverts, std::span<const VarMask> adjacency);
/// Facets containing a vertex that lies in no other facet.
std::vector<VarMask> free_vertex_facets(const SimplicialComplex& complex);
/// Number of facets that admit a free vertex.
int free_facet_count(const SimplicialComplex& complex);

}  // namespace mp
