#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "mp/graph.hpp"
#include "mp/monomial.hpp"

namespace testing {

/// Squarefree monomial from 1-based variable indices.
inline mp::Monomial sq(int nvars, std::initializer_list<int> vars) {
    mp::VarMask mask = 0;
    for (int v : vars) mask |= mp::VarMask{1} << (v - 1);
    return mp::Monomial::from_support(mask, nvars);
}

inline mp::Monomial mono(std::vector<int> exps) { return mp::Monomial(std::move(exps)); }

/// Ideal from squarefree generators given by 1-based variable lists.
inline mp::MonomialIdeal sq_ideal(int nvars, std::initializer_list<std::initializer_list<int>> gens) {
    std::vector<mp::Monomial> ms;
    for (auto g : gens) ms.push_back(sq(nvars, g));
    return mp::minimalize(ms, nvars);
}

/// Graph from 1-based edges.
inline mp::SimpleGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    mp::SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

/// The 5-vertex graph H: the 5-cycle 1-2-3-4-5 with the chord 25.
inline mp::SimpleGraph graph_h() { return graph(5, {{1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {4, 5}}); }

inline mp::SimpleGraph star(int leaves) {
    mp::SimpleGraph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace testing
