#include <doctest.h>

#include <set>

#include "mp/error.hpp"
#include "mp/graph.hpp"
#include "mp/theorems.hpp"
#include "support.hpp"

using namespace mp;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::set<std::string> names(const std::vector<ClassificationRecord>& records) {
    std::set<std::string> out;
    for (const auto& r : records) out.insert(r.graph6);
    return out;
}

bool has_failure_free(const VerificationReport& r) {
    for (const auto& w : r.failures) MESSAGE(r.id << ": " << w.graph6 << " " << w.detail);
    return r.passed();
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("classification of H, C5 and K2+K3") {
    const auto h = classify_graph(testing::graph_h(), Q);
    CHECK(h.all_powers_cm);
    CHECK(h.nu == 2);
    REQUIRE(h.per_k.size() == 2);
    CHECK(h.per_k[1].equals_veronese);
    CHECK_FALSE(h.per_k[0].equals_veronese);
    CHECK(h.graph6 == canonical_form(testing::graph_h()));

    const auto c5 = classify_graph(cycle_graph(5), Q);
    CHECK(c5.all_powers_cm);
    CHECK(c5.per_k[1].equals_veronese);
    CHECK_FALSE(c5.tags.chordal);

    const auto k2k3 = classify_graph(disjoint_union(complete_graph(2), complete_graph(3)), Q);
    CHECK_FALSE(k2k3.all_powers_cm);
    CHECK(k2k3.per_k[0].is_cm);
    CHECK_FALSE(k2k3.per_k[1].is_cm);
    CHECK(k2k3.per_k[1].dim == 4);
    CHECK(k2k3.per_k[1].depth == 3);

    const auto p4 = classify_graph(path_graph(4), Q);
    CHECK(p4.tags.cm_forest);
    CHECK(p4.tags.bipartite);
    CHECK(p4.tags.very_well_covered);
    CHECK(p4.tags.whisker_shape);
    CHECK(p4.per_k[0].generators == 3);
    CHECK_THROWS_AS(classify_graph(SimpleGraph(3), Q), InvalidInput);
}

TEST_CASE("classification records satisfy their invariants") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : enumerate_graphs(n, true)) {
            const auto r = classify_graph(g, Q);
            REQUIRE(static_cast<int>(r.per_k.size()) == r.nu);
            bool all = true;
            for (const auto& p : r.per_k) {
                all = all && p.is_cm;
                REQUIRE(p.is_cm == (p.depth == p.dim));
                REQUIRE(p.depth + p.pdim == n);
                REQUIRE(p.height + p.dim == n);
            }
            REQUIRE(r.all_powers_cm == all);
        }
    }
}

TEST_CASE("small classification: complete graphs and CM forests, then K5, H, C5") {
    for (int n = 2; n <= 4; ++n) {
        std::set<std::string> expected;
        for (const auto& g : enumerate_graphs(n, true)) {
            if (is_complete(g) || (is_forest(g) && is_cohen_macaulay(edge_ideal(g), Q))) expected.insert(canonical_form(g));
        }
        CHECK(names(classify_all(n, Q)) == expected);
    }
    CHECK(names(classify_all(4, Q)).size() == 3);
    const std::set<std::string> five{canonical_form(complete_graph(5)), canonical_form(testing::graph_h()),
                                     canonical_form(cycle_graph(5))};
    CHECK(names(classify_all(5, Q)) == five);
}

TEST_CASE("classification does not depend on the worker count") {
    const auto one = classify_all(6, Q, 1);
    const auto three = classify_all(6, Q, 3);
    CHECK(one == three);
    CHECK(std::is_sorted(one.begin(), one.end(), [](const auto& a, const auto& b) { return a.graph6 < b.graph6; }));
}

TEST_CASE("the work pool keeps order and rethrows") {
    const auto squares = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < squares.size(); ++i) REQUIRE(squares[i] == static_cast<int>(i * i));
    CHECK(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
    CHECK_THROWS_AS(parallel_map<int>(50, 3,
                                      [](std::size_t i) -> int {
                                          if (i == 17) throw InvalidInput("boom");
                                          return 0;
                                      }),
                    InvalidInput);
}

TEST_CASE("last-power equivalence on named graphs") {
    const std::vector<SimpleGraph> corpus{cycle_graph(5), testing::star(3), complete_graph(4), path_graph(5)};
    const auto r = verify_last_power_theorem(corpus, Q, 1);
    CHECK(has_failure_free(r));
    CHECK(r.instances == 4);
    CHECK(tutte_condition(cycle_graph(5)));
    CHECK(is_cohen_macaulay(matching_power(edge_ideal(cycle_graph(5)), 2), Q));
    CHECK_FALSE(is_cohen_macaulay(matching_power(edge_ideal(testing::star(3)), 1), Q));
}

TEST_CASE("Betti splitting on P4 and on a degenerate L") {
    const auto p4 = verify_betti_splitting(path_graph(4), 1, 1, Q);
    CHECK(has_failure_free(p4));
    CHECK(p4.findings.empty());

    // K4 with k = 2: K4 minus N[x] is empty, so L = 0 and the depth inequality has no content.
    const auto k4 = verify_betti_splitting(complete_graph(4), 2, 0, Q);
    CHECK(has_failure_free(k4));
    CHECK(k4.findings.size() == 1);

    CHECK_THROWS_AS(verify_betti_splitting(path_graph(4), 3, 0, Q), InvalidInput);
    CHECK_THROWS_AS(verify_betti_splitting(path_graph(4), 1, 4, Q), InvalidInput);
}

TEST_CASE("hereditary on C5 and the K2+K3 converse") {
    const std::vector<SimpleGraph> corpus{cycle_graph(5), disjoint_union(complete_graph(2), complete_graph(3))};
    const auto r = verify_hereditary(corpus, Q, 1);
    CHECK(has_failure_free(r));
    bool converse = false;
    for (const auto& note : r.notes) converse = converse || note.find("K2+K3 at k = 2") != std::string::npos;
    CHECK(converse);
    // Each N[x]-deletion of C5 is a single edge.
    for (int x = 0; x < 5; ++x) CHECK(closed_neighborhood_deletion(cycle_graph(5), x).edge_count() == 1);
}

TEST_CASE("dimension bounds on the 8-vertex example") {
    const std::vector<SimpleGraph> corpus{vwc_example_graph(), complete_graph(2)};
    CHECK(has_failure_free(verify_dim_bounds(corpus, 1)));
    CHECK(summary(matching_power(edge_ideal(vwc_example_graph()), 3), Q).dim == 6);
}

TEST_CASE("perfect-matching theorem on P4 and C4") {
    const std::vector<SimpleGraph> corpus{path_graph(4), cycle_graph(4)};
    const auto r = verify_perfect_matching_theorem(corpus, Q, 1);
    CHECK(has_failure_free(r));
    CHECK(r.instances == 2);
    CHECK_FALSE(is_cohen_macaulay(edge_ideal(cycle_graph(4)), Q));
}

TEST_CASE("linear resolution fails for the disconnected CM forest 2K2") {
    const auto two_edges = disjoint_union(complete_graph(2), complete_graph(2));
    const auto r = verify_perfect_matching_theorem(std::vector<SimpleGraph>{two_edges}, Q, 1);
    CHECK(r.passed());
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings[0].detail.find("disconnected") != std::string::npos);
}

TEST_CASE("very well-covered suite on small inputs") {
    const std::vector<SimpleGraph> corpus{whisker(complete_graph(3)), disjoint_union(complete_graph(2), complete_graph(2)),
                                          cycle_graph(4), path_graph(4)};
    CHECK(has_failure_free(verify_vwc(corpus, Q, 1)));
    CHECK_FALSE(classify_graph(whisker(complete_graph(3)), Q).all_powers_cm);
    const auto two_edges = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK(normalized_depth_function(edge_ideal(two_edges), Q) == std::vector<int>{1, 0});
}

TEST_CASE("chordal and Cameron-Walker suites") {
    CHECK(has_failure_free(verify_chordal(6, Q, 0)));
    CHECK(has_failure_free(verify_cameron_walker(6, Q, 0)));
    for (const auto& g : {disjoint_union(complete_graph(2), complete_graph(3)),
                          disjoint_union(complete_graph(3), complete_graph(3))}) {
        const auto r = classify_graph(g, Q);
        CHECK_FALSE((r.per_k[static_cast<std::size_t>(r.nu - 1)].is_cm && r.per_k[static_cast<std::size_t>(r.nu - 2)].is_cm));
    }
    CHECK_FALSE(classify_graph(generate_star_triangle(2), Q).all_powers_cm);
}

TEST_CASE("field independence for n <= 5") {
    const auto r = verify_field_independence(5, 0);
    CHECK(has_failure_free(r));
    CHECK(r.notes.size() == 4);
    for (const auto& g : {testing::graph_h(), cycle_graph(5)}) {
        for (const auto& f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) CHECK(classify_graph(g, f).all_powers_cm);
    }
}

TEST_CASE("run_verification dispatch") {
    VerifyOptions opts;
    opts.max_n = 5;
    opts.jobs = 2;
    for (const auto& id : theorem_ids()) {
        const auto r = run_verification(id, opts);
        CHECK(r.id == id);
        CHECK(has_failure_free(r));
        CHECK(r.instances > 0);
    }
    CHECK_THROWS_AS(run_verification("no-such-theorem", opts), InvalidInput);
    opts.max_n = 9;
    CHECK_THROWS_AS(run_verification("last-power", opts), Unsupported);
}

TEST_CASE("property checks record no violations") {
    reset_property_stats();
    classify_all(5, Q);
    const auto stats = property_stats();
    CHECK(stats.auslander_buchsbaum > 0);
    CHECK(stats.colon_stability > 0);
    CHECK(stats.big_cosize > 0);
    CHECK(stats.matching_number > 0);
    CHECK(stats.violations.empty());
}

}  // TEST_SUITE
