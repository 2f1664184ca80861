#include "mp/serialize.hpp"

#include <json.hpp>

#include "mp/error.hpp"

namespace mp {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
    try {
        Json doc = Json::parse(text);
        if (!doc.is_object() || doc.value("schema", 0) != kJsonSchema) {
            throw ParseError("unsupported or missing JSON schema version", 0);
        }
        return doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte == 0 ? 0 : e.byte - 1);
    }
}

template <typename F>
auto guarded(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what(), 0);
    }
}

Json betti_json(const BettiTable& table) {
    Json graded = Json::array();
    for (const auto& [key, value] : table.graded()) graded.push_back({key.first, key.second, value});
    Json out{{"schema", kJsonSchema}, {"field", table.field().name()}, {"graded", graded}};
    if (table.multigraded()) {
        Json multi = Json::array();
        for (const auto& [key, value] : *table.multigraded()) multi.push_back({key.first, key.second, value});
        out["multigraded"] = multi;
    } else {
        out["multigraded"] = nullptr;
    }
    return out;
}

Json summary_json(const HomologicalSummary& s) {
    return Json{{"nvars", s.nvars}, {"height", s.height}, {"dim", s.dim},    {"depth", s.depth},
                {"pdim", s.pdim},   {"is_cm", s.is_cm},   {"field", s.field.name()}};
}

HomologicalSummary summary_of(const Json& j) {
    HomologicalSummary s;
    s.nvars = j.at("nvars").get<int>();
    s.height = j.at("height").get<int>();
    s.dim = j.at("dim").get<int>();
    s.depth = j.at("depth").get<int>();
    s.pdim = j.at("pdim").get<int>();
    s.is_cm = j.at("is_cm").get<bool>();
    s.field = FieldSpec::parse(j.at("field").get<std::string>());
    return s;
}

Json record_json(const ClassificationRecord& r) {
    Json per_k = Json::array();
    for (const auto& p : r.per_k) {
        per_k.push_back(Json{{"k", p.k},
                             {"generators", p.generators},
                             {"height", p.height},
                             {"dim", p.dim},
                             {"depth", p.depth},
                             {"pdim", p.pdim},
                             {"is_cm", p.is_cm},
                             {"equals_veronese", p.equals_veronese}});
    }
    const auto& t = r.tags;
    Json tags{{"complete", t.complete},
              {"forest", t.forest},
              {"cm_forest", t.cm_forest},
              {"chordal", t.chordal},
              {"bipartite", t.bipartite},
              {"very_well_covered", t.very_well_covered},
              {"cameron_walker", t.cameron_walker},
              {"whisker_shape", t.whisker_shape}};
    return Json{{"graph6", r.graph6}, {"n", r.n},         {"nu", r.nu},
                {"per_k", per_k},     {"all_powers_cm", r.all_powers_cm}, {"tags", tags},
                {"field", r.field.name()}};
}

ClassificationRecord record_of(const Json& j) {
    ClassificationRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.nu = j.at("nu").get<int>();
    for (const auto& p : j.at("per_k")) {
        PowerRecord row;
        row.k = p.at("k").get<int>();
        row.generators = p.at("generators").get<std::size_t>();
        row.height = p.at("height").get<int>();
        row.dim = p.at("dim").get<int>();
        row.depth = p.at("depth").get<int>();
        row.pdim = p.at("pdim").get<int>();
        row.is_cm = p.at("is_cm").get<bool>();
        row.equals_veronese = p.at("equals_veronese").get<bool>();
        r.per_k.push_back(row);
    }
    r.all_powers_cm = j.at("all_powers_cm").get<bool>();
    const auto& t = j.at("tags");
    r.tags.complete = t.at("complete").get<bool>();
    r.tags.forest = t.at("forest").get<bool>();
    r.tags.cm_forest = t.at("cm_forest").get<bool>();
    r.tags.chordal = t.at("chordal").get<bool>();
    r.tags.bipartite = t.at("bipartite").get<bool>();
    r.tags.very_well_covered = t.at("very_well_covered").get<bool>();
    r.tags.cameron_walker = t.at("cameron_walker").get<bool>();
    r.tags.whisker_shape = t.at("whisker_shape").get<bool>();
    r.field = FieldSpec::parse(j.at("field").get<std::string>());
    return r;
}

}  // namespace

std::string betti_to_json(const BettiTable& table) { return betti_json(table).dump(); }

BettiTable betti_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    return guarded([&] {
        BettiTable table(FieldSpec::parse(doc.at("field").get<std::string>()));
        for (const auto& e : doc.at("graded")) {
            table.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::uint64_t>());
        }
        const auto& multi = doc.at("multigraded");
        if (!multi.is_null()) {
            table.enable_multigraded();
            for (const auto& e : multi) {
                table.add_multigraded(e.at(0).get<int>(), e.at(1).get<VarMask>(), e.at(2).get<std::uint64_t>());
            }
        }
        return table;
    });
}

std::string summary_to_json(const HomologicalSummary& summary) {
    Json out{{"schema", kJsonSchema}};
    out.update(summary_json(summary));
    return out.dump();
}

HomologicalSummary summary_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    return guarded([&] { return summary_of(doc); });
}

std::string records_to_json(std::span<const ClassificationRecord> records, const FieldSpec& field) {
    Json list = Json::array();
    for (const auto& r : records) list.push_back(record_json(r));
    return Json{{"schema", kJsonSchema}, {"field", field.name()}, {"records", list}}.dump(2);
}

std::vector<ClassificationRecord> records_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    return guarded([&] {
        std::vector<ClassificationRecord> out;
        for (const auto& r : doc.at("records")) out.push_back(record_of(r));
        return out;
    });
}

namespace {

Json witnesses_json(const std::vector<Witness>& list) {
    Json out = Json::array();
    for (const auto& w : list) {
        Json item{{"graph6", w.graph6}};
        item["k"] = w.k ? Json(*w.k) : Json(nullptr);
        item["x"] = w.x ? Json(*w.x) : Json(nullptr);
        item["field"] = w.field;
        item["detail"] = w.detail;
        out.push_back(item);
    }
    return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& report) {
    return Json{{"schema", kJsonSchema},
                {"theorem", report.id},
                {"corpus", report.corpus},
                {"instances", report.instances},
                {"passed", report.passed()},
                {"failures", witnesses_json(report.failures)},
                {"findings", witnesses_json(report.findings)},
                {"notes", report.notes},
                {"elapsed_seconds", report.elapsed_seconds}}
        .dump(2);
}

}  // namespace mp
