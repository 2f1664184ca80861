#include <doctest.h>

#include <random>

#include "mp/error.hpp"
#include "mp/graph.hpp"
#include "mp/simplicial.hpp"
#include "mp/theorems.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mp;
using testing::sq_ideal;

namespace {

VarMask bits(std::initializer_list<int> one_based) {
    VarMask m = 0;
    for (int v : one_based) m |= VarMask{1} << (v - 1);
    return m;
}

/// Minimal transversals by trying every vertex subset.
std::vector<VarMask> brute_transversals(const MonomialIdeal& ideal) {
    const auto supports = ideal.support_masks();
    const int n = ideal.nvars();
    std::vector<VarMask> hitting;
    for (VarMask s = 0; s < (VarMask{1} << n); ++s) {
        bool ok = true;
        for (VarMask e : supports) ok = ok && (s & e) != 0;
        if (ok) hitting.push_back(s);
    }
    std::vector<VarMask> out;
    for (VarMask s : hitting) {
        bool minimal = true;
        for (VarMask t : hitting) minimal = minimal && !(t != s && (t & s) == t);
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VarMask> sorted_vars(const std::vector<PrimeSupport>& primes) {
    std::vector<VarMask> out;
    for (const auto& p : primes) out.push_back(p.vars);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("simplicial") {

TEST_CASE("Stanley-Reisner complexes") {
    const auto k3 = stanley_reisner_complex(edge_ideal(complete_graph(3)));
    CHECK(std::vector<VarMask>(k3.facets().begin(), k3.facets().end()) ==
          std::vector<VarMask>{bits({1}), bits({2}), bits({3})});

    const auto whole = stanley_reisner_complex(MonomialIdeal(4));
    REQUIRE(whole.facets().size() == 1);
    CHECK(whole.facets()[0] == bits({1, 2, 3, 4}));

    const auto v3 = stanley_reisner_complex(squarefree_veronese(4, 3));
    CHECK(v3.facets().size() == 6);
    for (VarMask f : v3.facets()) CHECK(std::popcount(f) == 2);

    CHECK_THROWS_AS(stanley_reisner_complex(minimalize({testing::mono({2, 0})}, 2)), InvalidInput);
    CHECK_THROWS_AS(stanley_reisner_complex(MonomialIdeal::unit(2)), InvalidInput);
}

TEST_CASE("induced subcomplexes") {
    const auto delta = stanley_reisner_complex(edge_ideal(cycle_graph(5)));
    CHECK(induced_subcomplex(delta, 0) == SimplicialComplex::empty_complex(5));
    CHECK(induced_subcomplex(delta, bits({1, 2, 3, 4, 5})) == delta);
    const auto r = induced_subcomplex(delta, bits({1, 2, 3}));
    CHECK(std::vector<VarMask>(r.facets().begin(), r.facets().end()) == std::vector<VarMask>{bits({2}), bits({1, 3})});
}

TEST_CASE("void and empty complexes") {
    const auto v = SimplicialComplex::void_complex(3);
    const auto e = SimplicialComplex::empty_complex(3);
    CHECK(v.is_void());
    CHECK(v.dimension() == -2);
    CHECK(e.dimension() == -1);
    CHECK(v.faces().empty());
    CHECK(e.faces() == std::vector<VarMask>{0});
    CHECK(SimplicialComplex::simplex(3).faces().size() == 8);
}

TEST_CASE("minimal primes") {
    const auto claw = edge_ideal(testing::star(3));
    CHECK(sorted_vars(minimal_primes(claw)) == std::vector<VarMask>{bits({1}), bits({2, 3, 4})});
    CHECK(sorted_vars(minimal_primes(sq_ideal(2, {{1, 2}}))) == std::vector<VarMask>{bits({1}), bits({2})});
    const auto c5 = minimal_primes(edge_ideal(cycle_graph(5)));
    CHECK(c5.size() == 5);
    for (const auto& p : c5) CHECK(p.size() == 3);
    CHECK(minimal_primes(MonomialIdeal(3)).empty());
    CHECK_THROWS_AS(minimal_primes(MonomialIdeal::unit(3)), InvalidInput);
}

TEST_CASE("minimal primes agree with subset search and with vertex covers") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto i = oracle::random_squarefree_ideal(rng, 3 + trial % 6, 7);
        REQUIRE(sorted_vars(minimal_primes(i)) == brute_transversals(i));
    }
    for (int n = 2; n <= 7; ++n) {
        for (const auto& g : enumerate_graphs(n, true)) {
            auto covers = minimal_vertex_covers(g);
            std::sort(covers.begin(), covers.end());
            REQUIRE(sorted_vars(minimal_primes(edge_ideal(g))) == covers);
        }
    }
}

TEST_CASE("height, dimension, unmixedness") {
    const auto claw = edge_ideal(testing::star(3));
    CHECK(height(claw) == 1);
    CHECK(krull_dim(claw) == 3);
    CHECK_FALSE(is_unmixed(claw));
    CHECK(is_unmixed(edge_ideal(cycle_graph(5))));
    CHECK(is_unmixed(sq_ideal(4, {{1, 3, 4}})));
    CHECK(height(MonomialIdeal(3)) == 0);
    CHECK(krull_dim(MonomialIdeal(3)) == 3);

    const auto g = disjoint_union(complete_graph(2), complete_graph(3));
    CHECK(krull_dim(matching_power(edge_ideal(g), 2)) == 4);

    const auto fig = vwc_example_graph();
    for (int k = 1; k <= 4; ++k) CHECK(krull_dim(matching_power(edge_ideal(fig), k)) == 4 + k - 1);
}

TEST_CASE("dimension is the largest facet and height + dim = nvars") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const auto i = oracle::random_squarefree_ideal(rng, 3 + trial % 7, 8);
        const auto delta = stanley_reisner_complex(i);
        int largest = 0;
        for (VarMask f : delta.facets()) largest = std::max(largest, std::popcount(f));
        REQUIRE(krull_dim(i) == largest);
        REQUIRE(height(i) + krull_dim(i) == i.nvars());
    }
}

TEST_CASE("very well-covered graphs are unmixed of height |V|/2") {
    int seen = 0;
    for (int n = 2; n <= 8; n += 2) {
        for (const auto& g : enumerate_graphs(n, true)) {
            if (!is_very_well_covered(g)) continue;
            ++seen;
            REQUIRE(is_unmixed(edge_ideal(g)));
            REQUIRE(height(edge_ideal(g)) == n / 2);
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("clique complexes and free vertices") {
    const auto k4 = clique_complex(complete_graph(4));
    CHECK(k4.facets().size() == 1);
    CHECK(free_facet_count(k4) == 1);

    const auto st = clique_complex(generate_star_triangle(2));
    CHECK(st.facets().size() == 2);
    for (VarMask f : st.facets()) CHECK(std::popcount(f) == 3);
    CHECK(free_facet_count(st) == 2);

    // The 8-vertex example against a direct count of free vertices.
    const SimpleGraph fig = vwc_example_graph();
    const auto delta = clique_complex(fig);
    int brute_free = 0;
    for (VarMask f : delta.facets()) {
        bool has_free = false;
        for (VarMask r = f; r != 0; r &= r - 1) {
            const VarMask v = r & (~r + 1);
            int count = 0;
            for (VarMask h : delta.facets()) count += (h & v) ? 1 : 0;
            has_free = has_free || count == 1;
        }
        brute_free += has_free ? 1 : 0;
    }
    CHECK(free_facet_count(delta) == brute_free);
    CHECK(free_vertex_facets(delta).size() == static_cast<std::size_t>(brute_free));
}

}  // TEST_SUITE
