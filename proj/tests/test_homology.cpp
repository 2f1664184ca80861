#include <doctest.h>

#include <random>

#include "mp/error.hpp"
#include "mp/field.hpp"
#include "mp/graph.hpp"
#include "mp/homology.hpp"
#include "mp/linalg.hpp"
#include "mp/theorems.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mp;
using testing::sq_ideal;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

VarMask bits(std::initializer_list<int> one_based) {
    VarMask m = 0;
    for (int v : one_based) m |= VarMask{1} << (v - 1);
    return m;
}

/// Six-vertex real projective plane.
SimplicialComplex rp2() {
    return SimplicialComplex(6, {bits({1, 2, 3}), bits({1, 3, 4}), bits({1, 4, 5}), bits({1, 5, 6}), bits({1, 2, 6}),
                                 bits({2, 3, 5}), bits({3, 4, 6}), bits({2, 4, 5}), bits({3, 5, 6}), bits({2, 4, 6})});
}

std::size_t rank_mod_p_oracle(const DenseMatrix& m, std::int64_t p) {
    std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = ((m(r, c) % p) + p) % p;
    }
    auto inv = [p](std::int64_t x) {
        for (std::int64_t y = 1; y < p; ++y) {
            if (x * y % p == 1) return y;
        }
        return std::int64_t{0};
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[piv], a[rank]);
        const std::int64_t iv = inv(a[rank][c]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const std::int64_t f = a[r][c] * iv % p;
            for (std::size_t k = 0; k < m.cols(); ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> totals(const BettiTable& t) {
    std::vector<std::uint64_t> out;
    for (int i = 0; i <= t.projective_dimension(); ++i) out.push_back(t.total(i));
    return out;
}

}  // namespace

TEST_SUITE("homology_betti") {

TEST_CASE("field names round-trip") {
    CHECK(FieldSpec::parse("q") == Q);
    CHECK(FieldSpec::parse("gf2") == GF2);
    CHECK(FieldSpec::parse("gf:3") == GF3);
    CHECK(FieldSpec::parse("gf:101").name() == "gf:101");
    CHECK(FieldSpec::parse(GF3.name()) == GF3);
    CHECK_THROWS_AS(FieldSpec::parse("gf:4"), InvalidInput);
    CHECK_THROWS_AS(FieldSpec::parse("r"), InvalidInput);
}

TEST_CASE("exact rank over Q matches a rational elimination oracle") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9, cols = 1 + rng() % 9;
        DenseMatrix m(rows, cols);
        const bool huge = trial % 4 == 0;
        std::uniform_int_distribution<std::int64_t> small(-3, 3);
        std::uniform_int_distribution<std::int64_t> large(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = huge ? large(rng) : small(rng);
        }
        // Force dependencies now and then.
        if (rows >= 3 && trial % 3 == 0) {
            for (std::size_t c = 0; c < cols; ++c) m(2, c) = m(0, c) - 2 * m(1, c);
        }
        REQUIRE(rank_rational(m) == oracle::rational_rank(m));
        REQUIRE(matrix_rank(m, Q) == oracle::rational_rank(m));
    }
}

TEST_CASE("exact rank over GF(p)") {
    std::mt19937_64 rng(29);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
            DenseMatrix m(rows, cols);
            std::uniform_int_distribution<std::int64_t> d(-4, 4);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
            }
            REQUIRE(rank_mod_p(m, p) == rank_mod_p_oracle(m, p));
            REQUIRE(matrix_rank(m, FieldSpec::prime(p)) == rank_mod_p_oracle(m, p));
        }
    }
    DenseMatrix two(1, 1);
    two(0, 0) = 2;
    CHECK(rank_mod_p(two, 2) == 0);
    CHECK(rank_rational(two) == 1);
}

TEST_CASE("reduced homology of small complexes") {
    const SimplicialComplex circle(3, {bits({1, 2}), bits({2, 3}), bits({1, 3})});
    CHECK(reduced_homology_ranks(circle, Q) == std::vector<std::size_t>{0, 0, 1});
    CHECK(reduced_homology_ranks(SimplicialComplex::simplex(4), Q) == std::vector<std::size_t>{0, 0, 0, 0, 0});
    const SimplicialComplex points(2, {bits({1}), bits({2})});
    CHECK(reduced_homology_ranks(points, Q) == std::vector<std::size_t>{0, 1});
    CHECK(reduced_homology_ranks(SimplicialComplex::empty_complex(3), Q) == std::vector<std::size_t>{1});
    CHECK(reduced_homology_ranks(SimplicialComplex::void_complex(3), Q).empty());
}

TEST_CASE("reduced homology sees torsion only in characteristic two") {
    CHECK(reduced_homology_ranks(rp2(), Q) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(rp2(), GF3) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(reduced_homology_ranks(rp2(), GF2) == std::vector<std::size_t>{0, 0, 1, 1});
}

TEST_CASE("reduced Euler characteristic equals the alternating homology sum") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 6;
        std::uniform_int_distribution<VarMask> d(1, (VarMask{1} << n) - 1);
        std::vector<VarMask> facets;
        for (int i = 0, m = 1 + static_cast<int>(rng() % 5); i < m; ++i) facets.push_back(d(rng));
        const SimplicialComplex c(n, facets);
        long long chi = 0;
        for (VarMask f : c.faces()) chi += (std::popcount(f) % 2 == 1) ? 1 : -1;  // (-1)^dim, empty face included
        long long alt = 0;
        const auto h = reduced_homology_ranks(c, trial % 2 ? Q : GF2);
        for (std::size_t d_ = 0; d_ < h.size(); ++d_) {
            const int dim = static_cast<int>(d_) - 1;
            alt += (dim % 2 == 0 ? 1 : -1) * static_cast<long long>(h[d_]);
        }
        REQUIRE(chi == alt);
    }
}

TEST_CASE("Hochster Betti tables") {
    const auto p4 = betti_table_hochster(edge_ideal(path_graph(4)), Q);
    CHECK(totals(p4) == std::vector<std::uint64_t>{1, 3, 2});
    CHECK(p4.projective_dimension() == 2);
    CHECK(p4.at(1, 2) == 3);
    CHECK(p4.at(2, 3) == 2);
    const auto principal = betti_table_hochster(sq_ideal(3, {{1, 2}}), Q);
    CHECK(totals(principal) == std::vector<std::uint64_t>{1, 1});
    CHECK(summary(squarefree_veronese(3, 2), Q).depth == 1);
    CHECK_THROWS_AS(betti_table_hochster(minimalize({testing::mono({2, 0})}, 2), Q), InvalidInput);
    CHECK_THROWS_AS(betti_table_hochster(MonomialIdeal(26), Q), Unsupported);
    REQUIRE(p4.multigraded());
    CHECK(p4.multigraded()->at({2, bits({1, 2, 3})}) == 1);
}

TEST_CASE("Koszul Betti tables") {
    const auto t = betti_table_koszul(minimalize({testing::mono({2})}, 1), Q);
    CHECK(totals(t) == std::vector<std::uint64_t>{1, 1});
    CHECK(t.at(1, 2) == 1);
    CHECK(betti_table_koszul(edge_ideal(path_graph(4)), Q).graded() ==
          betti_table_hochster(edge_ideal(path_graph(4)), Q).graded());
}

TEST_CASE("Hochster and Koszul agree on 600 squarefree ideals") {
    std::mt19937_64 rng(37);
    int compared = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 1 + trial % 6;
        const auto i = oracle::random_squarefree_ideal(rng, n, 8);
        if (i.is_unit()) continue;
        const FieldSpec f = trial % 3 == 0 ? GF2 : Q;
        const auto h = betti_table_hochster(i, f);
        const auto k = betti_table_koszul(i, f);
        REQUIRE(h.graded() == k.graded());
        if (h.multigraded() && k.multigraded()) REQUIRE(*h.multigraded() == *k.multigraded());
        ++compared;
    }
    CHECK(compared >= 500);
}

TEST_CASE("polarization preserves graded Betti numbers on 150 ideals") {
    std::mt19937_64 rng(41);
    int compared = 0;
    for (int trial = 0; compared < 150; ++trial) {
        const auto i = oracle::random_ideal(rng, 2 + trial % 3, 4, 3, 5);
        if (i.is_squarefree() || i.is_unit()) continue;
        const auto p = polarize(i);
        REQUIRE(betti_table_koszul(i, Q).graded() == betti_table_hochster(p.ideal, Q).graded());
        ++compared;
    }
    CHECK(betti_table_koszul(minimalize({testing::mono({2, 0}), testing::mono({1, 1})}, 2), Q).graded() ==
          betti_table_hochster(polarize(minimalize({testing::mono({2, 0}), testing::mono({1, 1})}, 2)).ideal, Q)
              .graded());
}

TEST_CASE("summaries") {
    const auto g = disjoint_union(complete_graph(2), complete_graph(3));
    const auto s = summary(matching_power(edge_ideal(g), 2), Q);
    CHECK(s.dim == 4);
    CHECK(s.depth == 3);
    CHECK_FALSE(s.is_cm);

    const auto c5 = matching_power(edge_ideal(cycle_graph(5)), 2);
    CHECK(c5 == squarefree_veronese(5, 4));
    const auto t = summary(c5, Q);
    CHECK(t.depth == 3);
    CHECK(t.dim == 3);
    CHECK(t.is_cm);

    CHECK(is_cohen_macaulay(edge_ideal(testing::graph_h()), Q));

    // Non-squarefree inputs are reported in their own ring.
    const auto u = summary(minimalize({testing::mono({2, 0}), testing::mono({1, 1})}, 2), Q);
    CHECK(u.nvars == 2);
    CHECK(u.dim == 1);
    CHECK(u.depth == 0);
    CHECK(u.pdim == 2);
}

TEST_CASE("Auslander-Buchsbaum against the local cohomology depth") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        const auto i = trial % 2 ? oracle::random_squarefree_ideal(rng, n, 6) : oracle::random_ideal(rng, n, 4, 2, 4);
        if (i.is_unit()) continue;
        const FieldSpec f = trial % 3 == 0 ? GF2 : Q;
        const auto s = summary(i, f);
        REQUIRE(depth_by_local_cohomology(i, f) + s.pdim == s.nvars);
        REQUIRE(s.depth == depth_by_local_cohomology(i, f));
        REQUIRE(s.depth <= s.dim);
    }
}

TEST_CASE("colon by a monomial outside a CM ideal keeps it CM of the same depth") {
    std::mt19937_64 rng(47);
    int cm = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 5;
        const auto i = oracle::random_squarefree_ideal(rng, n, 5);
        if (i.is_unit() || !is_cohen_macaulay(i, Q)) continue;
        ++cm;
        const auto s = summary(i, Q);
        for (const auto& u : oracle::monomials_up_to(n, 2)) {
            const Monomial m(u);
            if (i.contains(m)) continue;
            const auto t = summary(colon(i, m), Q);
            REQUIRE(t.is_cm);
            REQUIRE(t.depth == s.depth);
        }
    }
    CHECK(cm > 50);
}

TEST_CASE("squarefree Veronese ideals: depth = dim = k - 1") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto s = summary(squarefree_veronese(n, k), Q);
            REQUIRE(s.depth == k - 1);
            REQUIRE(s.dim == k - 1);
        }
    }
}

TEST_CASE("pdim is bounded by big-cosize") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const auto i = oracle::random_ideal(rng, 2 + trial % 5, 6, 2, 4);
        if (i.is_unit()) continue;
        REQUIRE(summary(i, Q).pdim <= big_cosize(i));
    }
}

TEST_CASE("linear resolutions") {
    CHECK(has_linear_resolution(betti_table(edge_ideal(path_graph(4)), Q), 2));
    CHECK(has_linear_resolution(betti_table(sq_ideal(3, {{1, 2, 3}}), Q), 3));
    CHECK_FALSE(has_linear_resolution(betti_table(sq_ideal(4, {{1, 2}, {3, 4}}), Q), 2));
    CHECK(has_linear_resolution(betti_table(squarefree_veronese(5, 3), Q), 3));
    CHECK_THROWS_AS(has_linear_resolution(betti_table(sq_ideal(3, {{1}, {2, 3}}), Q), 1), InvalidInput);

    // Connected CM forests with a perfect matching: I^[n-1] is linear.
    for (const auto& g : {path_graph(4), whisker(path_graph(3))}) {
        const int n = g.order() / 2;
        const auto power = matching_power(edge_ideal(g), n - 1);
        REQUIRE(summary(power, Q).is_cm);
        REQUIRE(summary(power, Q).dim == 2 * n - 2);
        CHECK(has_linear_resolution(betti_table(power, Q), 2 * n - 2));
    }
}

TEST_CASE("normalized depth function") {
    CHECK(normalized_depth_function(edge_ideal(complete_graph(2)), Q) == std::vector<int>{0});
    const auto two_edges = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(normalized_depth_function(edge_ideal(two_edges), Q) == std::vector<int>{1, 0});
    CHECK(normalized_depth_function(edge_ideal(path_graph(4)), Q) == std::vector<int>{1, 0});
    CHECK_THROWS_AS(normalized_depth_function(MonomialIdeal(3), Q), InvalidInput);
}

TEST_CASE("depth lower bound 2k - 1") {
    CHECK(depth_lower_bound_check(complete_graph(2), 1));
    CHECK(depth_lower_bound_check(cycle_graph(5), 2));
    CHECK(summary(matching_power(edge_ideal(cycle_graph(5)), 2), Q).depth == 3);
    CHECK_THROWS_AS(depth_lower_bound_check(cycle_graph(5), 3), InvalidInput);
    for (int n = 2; n <= 6; ++n) {
        for (const auto& g : enumerate_graphs(n, true)) {
            for (int k = 1; k <= matching_number(g); ++k) REQUIRE(depth_lower_bound_check(g, k));
        }
    }
}

TEST_CASE("the memo returns the same tables as a fresh computation") {
    auto& cache = BettiCache::instance();
    const auto i = edge_ideal(cycle_graph(6));
    const auto warm = betti_table(i, Q);
    cache.set_enabled(false);
    const auto cold = betti_table(i, Q);
    cache.set_enabled(true);
    CHECK(warm == cold);
    CHECK(cache.find(BettiCache::key(i, Q)).has_value());
}

}  // TEST_SUITE
