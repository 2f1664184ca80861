#include <chrono>
#include <map>
#include <random>
#include <set>

#include "checked.hpp"
#include "mp/error.hpp"
#include "mp/theorems.hpp"

namespace mp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Outcome {
    std::uint64_t instances = 0;
    std::vector<Witness> failures;
    std::vector<Witness> findings;
    std::map<std::string, std::uint64_t> tallies;

    void fail(const std::string& graph6, std::optional<int> k, std::optional<int> x, const FieldSpec& field,
              std::string detail) {
        failures.push_back(Witness{graph6, k, x, field.name(), std::move(detail)});
    }
    void find(const std::string& graph6, std::optional<int> k, std::optional<int> x, const FieldSpec& field,
              std::string detail) {
        findings.push_back(Witness{graph6, k, x, field.name(), std::move(detail)});
    }
};

VerificationReport over_corpus(std::string id, std::string corpus_text, std::span<const SimpleGraph> corpus, int jobs,
                               const std::function<Outcome(const SimpleGraph&)>& fn) {
    const auto start = Clock::now();
    const auto outcomes = parallel_map<Outcome>(corpus.size(), jobs, [&](std::size_t i) { return fn(corpus[i]); });
    VerificationReport report;
    report.id = std::move(id);
    report.corpus = std::move(corpus_text);
    std::map<std::string, std::uint64_t> tallies;
    for (const auto& o : outcomes) {
        report.instances += o.instances;
        report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
        report.findings.insert(report.findings.end(), o.findings.begin(), o.findings.end());
        for (const auto& [key, count] : o.tallies) tallies[key] += count;
    }
    for (const auto& [key, count] : tallies) report.notes.push_back(key + ": " + std::to_string(count));
    report.elapsed_seconds = seconds_since(start);
    return report;
}

std::string corpus_text(std::string family, std::span<const SimpleGraph> corpus) {
    int lo = 64, hi = 0;
    for (const auto& g : corpus) {
        lo = std::min(lo, g.order());
        hi = std::max(hi, g.order());
    }
    std::string out = family + " (" + std::to_string(corpus.size()) + " graphs";
    if (!corpus.empty()) out += ", " + std::to_string(lo) + ".." + std::to_string(hi) + " vertices";
    return out + ")";
}

/// Summaries of I(G)^[k] for k = 1..ν(G), in the ring of G.
std::vector<HomologicalSummary> power_summaries(const SimpleGraph& g, const FieldSpec& field, const std::string& name) {
    const MonomialIdeal ideal = edge_ideal_in(g, g.order());
    const int nu = matching_number(g);
    std::vector<HomologicalSummary> out;
    for (int k = 1; k <= nu; ++k) out.push_back(detail::checked_summary(matching_power(ideal, k), field, name, k));
    return out;
}

bool all_cm(const std::vector<HomologicalSummary>& summaries) {
    return std::all_of(summaries.begin(), summaries.end(), [](const auto& s) { return s.is_cm; });
}

bool same_betti(const BettiTable::Graded& lhs, const BettiTable::Graded& j, const BettiTable::Graded& l,
                const BettiTable::Graded& jl, std::string& mismatch) {
    std::set<std::pair<int, int>> keys;
    for (const auto* m : {&lhs, &j, &l}) {
        for (const auto& [key, value] : *m) keys.insert(key);
    }
    for (const auto& [key, value] : jl) keys.insert({key.first + 1, key.second});
    auto get = [](const BettiTable::Graded& m, int i, int deg) -> std::uint64_t {
        auto it = m.find({i, deg});
        return it == m.end() ? 0 : it->second;
    };
    for (auto [i, deg] : keys) {
        const auto left = get(lhs, i, deg);
        const auto right = get(j, i, deg) + get(l, i, deg) + get(jl, i - 1, deg);
        if (left != right) {
            mismatch = "beta_{" + std::to_string(i) + "," + std::to_string(deg) + "}: " + std::to_string(left) +
                       " != " + std::to_string(right);
            return false;
        }
    }
    return true;
}

}  // namespace

void VerificationReport::merge(VerificationReport other) {
    instances += other.instances;
    for (auto& f : other.failures) failures.push_back(std::move(f));
    for (auto& f : other.findings) findings.push_back(std::move(f));
    for (auto& n : other.notes) notes.push_back(std::move(n));
    elapsed_seconds += other.elapsed_seconds;
}

// ---------------------------------------------------------------------------

VerificationReport verify_last_power_theorem(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs) {
    return over_corpus("last-power", corpus_text("graphs without isolated vertices", corpus), corpus, jobs,
                       [&](const SimpleGraph& g) {
                           Outcome o;
                           const std::string name = detail::graph_name(g);
                           detail::check_matching_number(g, name);
                           const int n = g.order();
                           const int nu = matching_number(g);
                           const MonomialIdeal last = matching_power(edge_ideal(g), nu);
                           const bool a = detail::checked_summary(last, field, name, nu).is_cm;
                           const bool b = nu == n / 2 && last == squarefree_veronese(n, 2 * nu);
                           const bool c = tutte_condition(g);
                           o.instances = 1;
                           if (a != b || b != c) {
                               o.fail(name, nu, std::nullopt, field,
                                      "CM " + yes_no(a) + ", Veronese " + yes_no(b) + ", matching condition " +
                                          yes_no(c));
                           }
                           if (a) ++o.tallies["last power Cohen-Macaulay"];
                           return o;
                       });
}

VerificationReport verify_betti_splitting(const SimpleGraph& g, int k, int x, const FieldSpec& field) {
    const auto start = Clock::now();
    const int n = g.order();
    const std::string name = detail::graph_name(g);
    if (x < 0 || x >= n) throw InvalidInput("vertex out of range");
    if (k < 1 || k > matching_number(g)) throw InvalidInput("k must lie in 1..ν(G)");

    Outcome o;
    o.instances = 1;
    auto fail = [&](std::string detail) { o.fail(name, k, x + 1, field, std::move(detail)); };

    const MonomialIdeal power = matching_power(edge_ideal_in(g, n), k);
    const MonomialIdeal lhs = colon(power, Monomial::from_support(VarMask{1} << x, n));

    MonomialIdeal j(n);
    MonomialIdeal neighbours(n);
    for (VarMask rest = g.neighbors(x); rest != 0; rest &= rest - 1) {
        const int y = std::countr_zero(rest);
        const SimpleGraph rest_graph = delete_vertices(g, (VarMask{1} << x) | (VarMask{1} << y));
        const MonomialIdeal y_ideal = minimalize({Monomial::from_support(VarMask{1} << y, n)}, n);
        j = ideal_sum(j, ideal_product(y_ideal, matching_power(edge_ideal_in(rest_graph, n), k - 1)));
        neighbours = ideal_sum(neighbours, y_ideal);
    }
    const MonomialIdeal l = matching_power(edge_ideal_in(closed_neighborhood_deletion(g, x), n), k);
    const MonomialIdeal jl = ideal_intersection(j, l);

    if (lhs != ideal_sum(j, l)) fail("colon ideal differs from the decomposition J + L");
    if (lhs.size() != j.size() + l.size()) {
        fail("minimal generators do not split: " + std::to_string(lhs.size()) + " vs " + std::to_string(j.size()) +
             " + " + std::to_string(l.size()));
    }
    if (jl != ideal_product(neighbours, l)) fail("J ∩ L differs from N(x)·L");

    std::string mismatch;
    if (!same_betti(ideal_betti_numbers(lhs, field), ideal_betti_numbers(j, field), ideal_betti_numbers(l, field),
                    ideal_betti_numbers(jl, field), mismatch)) {
        fail("Betti additivity fails at " + mismatch);
    }

    // With L = 0 the splitting is trivial and depth S/L = n says nothing about I:x.
    const int depth_lhs = detail::checked_summary(lhs, field, name, k).depth;
    const int depth_l = detail::checked_summary(l, field, name, k).depth;
    const int degree = g.degree(x);
    if (depth_l - degree < depth_lhs) {
        const std::string detail = "depth S/L - |N(x)| = " + std::to_string(depth_l - degree) +
                                   " < depth S/(I:x) = " + std::to_string(depth_lhs);
        if (l.is_zero()) o.find(name, k, x + 1, field, "L = 0: " + detail);
        else fail(detail);
    }

    VerificationReport report;
    report.id = "betti-splitting";
    report.corpus = name + ", k = " + std::to_string(k) + ", x = " + std::to_string(x + 1);
    report.instances = o.instances;
    report.failures = std::move(o.failures);
    report.findings = std::move(o.findings);
    report.elapsed_seconds = seconds_since(start);
    return report;
}

VerificationReport verify_hereditary(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs) {
    const std::string k2k3 = canonical_form(disjoint_union(complete_graph(2), complete_graph(3)));
    return over_corpus(
        "hereditary", corpus_text("graphs without isolated vertices", corpus), corpus, jobs, [&](const SimpleGraph& g) {
            Outcome o;
            const int n = g.order();
            const std::string name = detail::graph_name(g);
            const MonomialIdeal ideal = edge_ideal(g);
            const auto components = connected_components(g);
            const int nu = matching_number(g);
            for (int k = 1; k <= nu; ++k) {
                const MonomialIdeal power = matching_power(ideal, k);
                const HomologicalSummary s = detail::checked_summary(power, field, name, k);
                if (!s.is_cm) {
                    if (components.size() < 2) continue;
                    bool parts_cm = true;
                    for (const auto& c : components) {
                        parts_cm = parts_cm &&
                                   detail::checked_summary(matching_power(edge_ideal_in(c, n), k), field, name, k).is_cm;
                    }
                    if (parts_cm) {
                        ++o.tallies["components CM but the power is not (converse fails)"];
                        if (name == k2k3 && k == 2) ++o.tallies["K2+K3 at k = 2 shows the converse failing"];
                    }
                    continue;
                }
                ++o.instances;
                for (int x = 0; x < n; ++x) {
                    const MonomialIdeal l =
                        matching_power(edge_ideal_in(closed_neighborhood_deletion(g, x), n), k);
                    const HomologicalSummary t = detail::checked_summary(l, field, name, k);
                    if (!t.is_cm) o.fail(name, k, x + 1, field, "I(G minus N[x])^[k] is not Cohen-Macaulay");
                    if (l.is_zero()) {
                        ++o.tallies["L = 0, dimension identity not applicable"];
                    } else if (t.dim - g.degree(x) != s.dim) {
                        o.fail(name, k, x + 1, field,
                               "dim S/L - |N(x)| = " + std::to_string(t.dim - g.degree(x)) + " but dim S/I^[k] = " +
                                   std::to_string(s.dim));
                    }
                    const HomologicalSummary c =
                        detail::checked_summary(colon(power, Monomial::from_support(VarMask{1} << x, n)), field, name, k);
                    if (!c.is_cm || c.depth != s.depth) {
                        o.fail(name, k, x + 1, field,
                               "colon by x: CM " + yes_no(c.is_cm) + ", depth " + std::to_string(c.depth) + " vs " +
                                   std::to_string(s.depth));
                    }
                }
                for (const auto& c : components) {
                    const MonomialIdeal part = matching_power(edge_ideal_in(c, n), k);
                    if (!detail::checked_summary(part, field, name, k).is_cm) {
                        o.fail(name, k, std::nullopt, field,
                               "component " + emit_graph6(c) + " has a non Cohen-Macaulay power");
                    }
                }
            }
            return o;
        });
}

VerificationReport verify_dim_bounds(std::span<const SimpleGraph> corpus, int jobs) {
    const FieldSpec field;
    return over_corpus(
        "dim-bounds", corpus_text("graphs with a perfect matching", corpus), corpus, jobs, [&](const SimpleGraph& g) {
            Outcome o;
            if (!has_perfect_matching(g)) {
                ++o.tallies["skipped, no perfect matching"];
                return o;
            }
            const std::string name = detail::graph_name(g);
            const int n = g.order() / 2;
            const MonomialIdeal ideal = edge_ideal(g);
            for (int k = 1; k <= n; ++k) {
                ++o.instances;
                const MonomialIdeal power = matching_power(ideal, k);
                const HomologicalSummary s = detail::checked_summary(power, field, name, k);
                if (s.dim != krull_dim(power)) o.fail(name, k, std::nullopt, field, "summary dim disagrees");
                if (s.dim < 2 * k - 1 || s.dim > n + k - 1) {
                    o.fail(name, k, std::nullopt, field,
                           "dim " + std::to_string(s.dim) + " outside [" + std::to_string(2 * k - 1) + ", " +
                               std::to_string(n + k - 1) + "]");
                }
                if (s.depth < 2 * k - 1) {
                    o.fail(name, k, std::nullopt, field, "depth " + std::to_string(s.depth) + " < 2k - 1");
                }
                if (n >= 2 && k == n - 1) {
                    if (s.dim != 2 * n - 3 && s.dim != 2 * n - 2) {
                        o.fail(name, k, std::nullopt, field, "dim at k = n-1 is " + std::to_string(s.dim));
                    }
                    ++o.tallies[s.dim == 2 * n - 2 ? "dim 2n-2 at k = n-1" : "dim 2n-3 at k = n-1"];
                    if (s.pdim > 3) o.fail(name, k, std::nullopt, field, "pdim " + std::to_string(s.pdim) + " > 3");
                    if (big_cosize(power) > 3) ++o.tallies["big-cosize > 3 at k = n-1 (pdim <= 3 still holds)"];
                }
            }
            return o;
        });
}

VerificationReport verify_perfect_matching_theorem(std::span<const SimpleGraph> corpus, const FieldSpec& field,
                                                   int jobs) {
    return over_corpus(
        "perfect-matching", corpus_text("graphs with a perfect matching", corpus), corpus, jobs,
        [&](const SimpleGraph& g) {
            Outcome o;
            if (!has_perfect_matching(g) || g.order() < 4) {
                ++o.tallies["skipped, no perfect matching of size >= 2"];
                return o;
            }
            const std::string name = detail::graph_name(g);
            const int n = g.order() / 2;
            const auto powers = power_summaries(g, field, name);
            const HomologicalSummary& before_last = powers[static_cast<std::size_t>(n - 2)];
            if (before_last.dim != 2 * n - 2) {
                ++o.tallies["excluded by the hypothesis, dim 2n-3 at k = n-1"];
                return o;
            }
            ++o.instances;
            const bool a = all_cm(powers);
            const bool b = powers.front().is_cm && before_last.is_cm;
            const bool c = is_forest(g) && powers.front().is_cm;
            if (a != b || b != c) {
                o.fail(name, std::nullopt, std::nullopt, field,
                       "all powers CM " + yes_no(a) + ", I and I^[n-1] CM " + yes_no(b) + ", CM forest " + yes_no(c));
            }
            if (a) ++o.tallies["all powers Cohen-Macaulay"];
            if (before_last.is_cm) {
                const MonomialIdeal power = matching_power(edge_ideal(g), n - 1);
                const bool connected = is_connected(g);
                if (!has_linear_resolution(betti_table(power, field), 2 * n - 2)) {
                    const std::string detail = "I^[n-1] is CM of dim 2n-2 without a linear resolution";
                    if (connected) o.fail(name, n - 1, std::nullopt, field, detail);
                    else o.find(name, n - 1, std::nullopt, field, "disconnected: " + detail);
                }
                ++o.tallies[connected ? "linear resolution checked, connected" : "linear resolution checked, disconnected"];
            }
            return o;
        });
}

VerificationReport verify_vwc(std::span<const SimpleGraph> corpus, const FieldSpec& field, int jobs) {
    auto report = over_corpus(
        "vwc", corpus_text("graphs screened for very well-covered, bipartite and whisker members", corpus), corpus,
        jobs, [&](const SimpleGraph& g) {
            Outcome o;
            const bool vwc = is_very_well_covered(g);
            const bool bipartite = is_bipartite(g);
            const bool whisker_shape = is_whisker_graph(g);
            if (!vwc && !bipartite && !whisker_shape) return o;
            const std::string name = detail::graph_name(g);
            const int n = g.order();
            const auto powers = power_summaries(g, field, name);
            const int nu = static_cast<int>(powers.size());
            const bool every = all_cm(powers);
            const bool cm = powers.front().is_cm;
            const bool cm_forest = is_forest(g) && cm;
            ++o.instances;

            if (vwc) {
                ++o.tallies["very well-covered"];
                if (!has_perfect_matching(g)) o.fail(name, std::nullopt, std::nullopt, field, "no perfect matching");
                const bool b = cm && (nu == 1 || powers[static_cast<std::size_t>(nu - 2)].is_cm);
                if (every != b || b != cm_forest) {
                    o.fail(name, std::nullopt, std::nullopt, field,
                           "all powers CM " + yes_no(every) + ", I and I^[nu-1] CM " + yes_no(b) + ", CM forest " +
                               yes_no(cm_forest));
                }
                if (cm) {
                    ++o.tallies["Cohen-Macaulay very well-covered"];
                    for (int k = 1; k <= nu; ++k) {
                        const int dim = powers[static_cast<std::size_t>(k - 1)].dim;
                        if (dim != n / 2 + k - 1) {
                            o.fail(name, k, std::nullopt, field,
                                   "dim " + std::to_string(dim) + " != |V|/2 + k - 1 = " + std::to_string(n / 2 + k - 1));
                        }
                    }
                }
                if (every) {
                    for (int k = 1; k <= nu; ++k) {
                        const int g_k = powers[static_cast<std::size_t>(k - 1)].depth - (2 * k - 1);
                        if (g_k != n / 2 - k) {
                            o.fail(name, k, std::nullopt, field,
                                   "normalized depth " + std::to_string(g_k) + " != " + std::to_string(n / 2 - k));
                        }
                    }
                }
                const auto labeling = vwc_cm_labeling_search(g);
                if (labeling.has_value() != cm) {
                    o.fail(name, std::nullopt, std::nullopt, field,
                           "labeling found " + yes_no(labeling.has_value()) + " but CM " + yes_no(cm));
                }
                if (labeling && !check_vwc_labeling(g, *labeling).all()) {
                    o.fail(name, std::nullopt, std::nullopt, field, "returned labeling violates a condition");
                }
            }
            if (bipartite) {
                ++o.tallies["bipartite"];
                if (every != cm_forest) {
                    o.fail(name, std::nullopt, std::nullopt, field,
                           "bipartite: all powers CM " + yes_no(every) + ", CM forest " + yes_no(cm_forest));
                }
            }
            if (whisker_shape) {
                ++o.tallies["whisker"];
                if (every != cm_forest) {
                    o.fail(name, std::nullopt, std::nullopt, field,
                           "whisker: all powers CM " + yes_no(every) + ", CM forest " + yes_no(cm_forest));
                }
            }
            return o;
        });

    // The worked example with its stated labeling.
    const SimpleGraph example = vwc_example_graph();
    const std::string name = detail::graph_name(example);
    ++report.instances;
    auto fail = [&](std::optional<int> k, std::string detail) {
        report.failures.push_back(Witness{name, k, std::nullopt, field.name(), "example: " + std::move(detail)});
    };
    if (!is_very_well_covered(example)) fail(std::nullopt, "not very well-covered");
    if (!check_vwc_labeling(example, vwc_example_labeling()).all()) fail(std::nullopt, "stated labeling fails");
    const auto powers = power_summaries(example, field, name);
    if (!powers.front().is_cm) fail(1, "I(G) is not Cohen-Macaulay");
    for (int k = 1; k <= static_cast<int>(powers.size()); ++k) {
        const int dim = powers[static_cast<std::size_t>(k - 1)].dim;
        if (dim != 3 + k) fail(k, "dim " + std::to_string(dim) + " != " + std::to_string(3 + k));
    }
    if (powers.size() != 4) fail(std::nullopt, "matching number is not 4");
    report.notes.push_back("8-vertex example: dim S/I^[k] = 3 + k checked for k = 1.." + std::to_string(powers.size()));
    return report;
}

VerificationReport verify_chordal(int n_max, const FieldSpec& field, int jobs) {
    const auto corpus = graph_corpus(2, n_max, [](const SimpleGraph& g) { return is_chordal(g); });
    auto report = over_corpus(
        "chordal", corpus_text("chordal graphs", corpus), corpus, jobs, [&](const SimpleGraph& g) {
            Outcome o;
            ++o.instances;
            const std::string name = detail::graph_name(g);
            const auto powers = power_summaries(g, field, name);
            const bool every = all_cm(powers);
            const bool cm = powers.front().is_cm;
            const bool b = (is_forest(g) && cm) || is_complete(g);
            if (every != b) {
                o.fail(name, std::nullopt, std::nullopt, field,
                       "all powers CM " + yes_no(every) + ", CM forest or complete " + yes_no(b));
            }
            // Free-vertex facets partition V exactly when I(G) is CM.
            const auto free = free_vertex_facets(clique_complex(g));
            VarMask covered = 0;
            bool disjoint = true;
            for (VarMask f : free) {
                disjoint = disjoint && (covered & f) == 0;
                covered |= f;
            }
            const bool partition = disjoint && covered == g.vertex_mask();
            if (partition != cm) {
                o.fail(name, 1, std::nullopt, field,
                       "free-vertex facets partition V " + yes_no(partition) + " but CM " + yes_no(cm));
            }
            if (every) ++o.tallies["all powers Cohen-Macaulay"];
            return o;
        });

    // Two complete components with a + b >= 5.
    for (int a = 2; a <= n_max; ++a) {
        for (int b = a; a + b <= n_max; ++b) {
            if (a + b < 5) continue;
            const SimpleGraph g = disjoint_union(complete_graph(a), complete_graph(b));
            const std::string name = detail::graph_name(g);
            const auto powers = power_summaries(g, field, name);
            const int nu = static_cast<int>(powers.size());
            ++report.instances;
            bool some_fails = !powers[static_cast<std::size_t>(nu - 1)].is_cm;
            if (nu >= 2) some_fails = some_fails || !powers[static_cast<std::size_t>(nu - 2)].is_cm;
            const std::string label = "K" + std::to_string(a) + "+K" + std::to_string(b);
            if (!some_fails) {
                report.failures.push_back(
                    Witness{name, std::nullopt, std::nullopt, field.name(), label + ": powers nu-1 and nu are both CM"});
            }
            if (a % 2 == 0 && b % 2 == 0) {
                const auto& s = powers[static_cast<std::size_t>(nu - 2)];
                if (s.depth != a + b - 3 || s.dim != a + b - 2) {
                    report.failures.push_back(Witness{name, nu - 1, std::nullopt, field.name(),
                                                      label + ": depth " + std::to_string(s.depth) + ", dim " +
                                                          std::to_string(s.dim) + " at k = nu-1"});
                }
            }
            report.notes.push_back(label + " checked");
        }
    }
    return report;
}

VerificationReport verify_cameron_walker(int n_max, const FieldSpec& field, int jobs) {
    const auto corpus = graph_corpus(2, n_max, [](const SimpleGraph& g) { return is_cameron_walker(g); });
    return over_corpus(
        "cameron-walker", corpus_text("Cameron-Walker graphs", corpus), corpus, jobs, [&](const SimpleGraph& g) {
            Outcome o;
            ++o.instances;
            const std::string name = detail::graph_name(g);
            const auto powers = power_summaries(g, field, name);
            const bool every = all_cm(powers);
            const bool small_complete = is_complete(g) && (g.order() == 2 || g.order() == 3);
            if (every != small_complete) {
                o.fail(name, std::nullopt, std::nullopt, field,
                       "all powers CM " + yes_no(every) + ", K2 or K3 " + yes_no(small_complete));
            }
            if (powers.back().is_cm) {
                ++o.tallies["last power Cohen-Macaulay"];
                if (!is_star_triangle(g) && !is_bipartite(g)) {
                    o.fail(name, static_cast<int>(powers.size()), std::nullopt, field,
                           "last power CM but neither a star triangle nor bipartite");
                }
            }
            if (is_star_triangle(g)) ++o.tallies["star triangles"];
            return o;
        });
}

VerificationReport verify_field_independence(int n_max, int jobs) {
    const auto start = Clock::now();
    VerificationReport report;
    report.id = "field-independence";
    report.corpus = "all-powers-CM graphs on 2.." + std::to_string(n_max) + " vertices over Q, GF(2), GF(3)";
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
    for (int n = 2; n <= n_max; ++n) {
        std::vector<std::set<std::string>> positives;
        for (const auto& field : fields) {
            std::set<std::string> names;
            for (const auto& r : classify_all(n, field, jobs)) names.insert(r.graph6);
            positives.push_back(std::move(names));
        }
        report.instances += enumerate_graphs(n, true).size();
        for (std::size_t f = 1; f < fields.size(); ++f) {
            for (const auto& name : positives[0]) {
                if (!positives[f].contains(name)) {
                    report.failures.push_back(Witness{name, std::nullopt, std::nullopt, fields[f].name(),
                                                      "positive over Q but not over " + fields[f].name()});
                }
            }
            for (const auto& name : positives[f]) {
                if (!positives[0].contains(name)) {
                    report.failures.push_back(Witness{name, std::nullopt, std::nullopt, fields[f].name(),
                                                      "positive over " + fields[f].name() + " but not over Q"});
                }
            }
        }
        std::string line = "n = " + std::to_string(n) + ":";
        for (std::size_t f = 0; f < fields.size(); ++f) {
            line += " " + fields[f].name() + " " + std::to_string(positives[f].size());
        }
        report.notes.push_back(line);
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

// ---------------------------------------------------------------------------

std::span<const std::string> theorem_ids() {
    static const std::vector<std::string> ids{"last-power",       "betti-splitting", "hereditary",
                                              "dim-bounds",       "perfect-matching", "vwc",
                                              "chordal",          "cameron-walker",   "field-independence"};
    return ids;
}

VerificationReport run_verification(const std::string& id, const VerifyOptions& opts) {
    const auto ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InvalidInput("unknown theorem id '" + id + "'");
    if (opts.max_n < 2 || opts.max_n > kMaxEnumerationOrder) {
        throw Unsupported("max-n must lie in 2.." + std::to_string(kMaxEnumerationOrder));
    }
    std::vector<FieldSpec> fields = opts.fields;
    if (fields.empty()) {
        fields.push_back(FieldSpec::rationals());
        if (id == "betti-splitting") fields.push_back(FieldSpec::prime(2));
    }

    const auto start = Clock::now();
    VerificationReport report;
    report.id = id;
    auto absorb = [&](VerificationReport part) {
        if (report.corpus.empty()) report.corpus = part.corpus;
        report.merge(std::move(part));
    };
    auto prefix_field = [](VerificationReport r, const FieldSpec& field) {
        for (auto& note : r.notes) note = field.name() + ": " + note;
        return r;
    };

    if (id == "field-independence") {
        absorb(verify_field_independence(opts.max_n, opts.jobs));
    } else if (id == "last-power") {
        auto corpus = graph_corpus(2, opts.max_n);
        std::string text = corpus_text("graphs without isolated vertices", corpus);
        if (opts.sample_size > 0 && opts.max_n < kMaxEnumerationOrder) {
            auto pool = enumerate_graphs(opts.max_n + 1, true);
            std::vector<SimpleGraph> sample;
            std::mt19937_64 rng(opts.seed);
            std::sample(pool.begin(), pool.end(), std::back_inserter(sample),
                        static_cast<std::size_t>(opts.sample_size), rng);
            text += " plus a seeded sample of " + std::to_string(sample.size()) + " graphs on " +
                    std::to_string(opts.max_n + 1) + " vertices";
            corpus.insert(corpus.end(), sample.begin(), sample.end());
        }
        for (const auto& field : fields) {
            auto part = prefix_field(verify_last_power_theorem(corpus, field, opts.jobs), field);
            part.corpus = text;
            absorb(std::move(part));
        }
    } else if (id == "betti-splitting") {
        const auto corpus = graph_corpus(2, opts.max_n, [](const SimpleGraph& g) { return is_connected(g); });
        for (const auto& field : fields) {
            auto parts = parallel_map<VerificationReport>(corpus.size(), opts.jobs, [&](std::size_t i) {
                const SimpleGraph& g = corpus[i];
                VerificationReport acc;
                const int nu = matching_number(g);
                for (int k = 1; k <= nu; ++k) {
                    for (int x = 0; x < g.order(); ++x) acc.merge(verify_betti_splitting(g, k, x, field));
                }
                return acc;
            });
            VerificationReport merged;
            for (auto& p : parts) merged.merge(std::move(p));
            merged.corpus = corpus_text("connected graphs, every k and vertex", corpus);
            merged.notes.push_back(field.name() + ": " + std::to_string(merged.instances) + " (G, k, x) triples");
            absorb(std::move(merged));
        }
    } else if (id == "hereditary") {
        const auto corpus = graph_corpus(2, opts.max_n);
        for (const auto& field : fields) absorb(prefix_field(verify_hereditary(corpus, field, opts.jobs), field));
    } else if (id == "dim-bounds") {
        const auto corpus = graph_corpus(2, opts.max_n, [](const SimpleGraph& g) { return has_perfect_matching(g); });
        absorb(verify_dim_bounds(corpus, opts.jobs));
    } else if (id == "perfect-matching") {
        const auto corpus = graph_corpus(4, opts.max_n, [](const SimpleGraph& g) { return has_perfect_matching(g); });
        for (const auto& field : fields) {
            absorb(prefix_field(verify_perfect_matching_theorem(corpus, field, opts.jobs), field));
        }
    } else if (id == "vwc") {
        const auto corpus = graph_corpus(2, opts.max_n, [](const SimpleGraph& g) {
            return is_very_well_covered(g) || is_bipartite(g) || is_whisker_graph(g);
        });
        for (const auto& field : fields) absorb(prefix_field(verify_vwc(corpus, field, opts.jobs), field));
    } else if (id == "chordal") {
        for (const auto& field : fields) absorb(prefix_field(verify_chordal(opts.max_n, field, opts.jobs), field));
    } else if (id == "cameron-walker") {
        for (const auto& field : fields) {
            absorb(prefix_field(verify_cameron_walker(opts.max_n, field, opts.jobs), field));
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

}  // namespace mp
