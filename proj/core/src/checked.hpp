#pragma once

#include <optional>
#include <string>

#include "mp/graph.hpp"
#include "mp/homology.hpp"
#include "mp/theorems.hpp"

namespace mp::detail {

/// summary(ideal, field), with the per-instance property checks recorded the
/// first time each (ideal, field) pair is seen.
HomologicalSummary checked_summary(const MonomialIdeal& ideal, const FieldSpec& field, const std::string& graph6,
                                   std::optional<int> k);

/// Records ν(I(G)) = ν(G) for g.
void check_matching_number(const SimpleGraph& g, const std::string& graph6);

/// graph6 of g, canonical when small enough.
std::string graph_name(const SimpleGraph& g);

}  // namespace mp::detail
