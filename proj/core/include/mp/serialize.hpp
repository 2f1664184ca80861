#pragma once

#include <span>
#include <string>
#include <string_view>

#include "mp/homology.hpp"
#include "mp/theorems.hpp"

namespace mp {

/// Version of every JSON document written here, stored as "schema".
inline constexpr int kJsonSchema = 1;

std::string betti_to_json(const BettiTable& table);
/// Throws ParseError on malformed input or a schema mismatch.
BettiTable betti_from_json(std::string_view text);

std::string summary_to_json(const HomologicalSummary& summary);
HomologicalSummary summary_from_json(std::string_view text);

/// {"schema": 1, "field": ..., "records": [...]}
std::string records_to_json(std::span<const ClassificationRecord> records, const FieldSpec& field);
std::vector<ClassificationRecord> records_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& report);

}  // namespace mp
