#include "doctest.h"
#include "helpers.hpp"

#include "fano/report.hpp"

#include "json.hpp"

#include <fstream>
#include <random>
#include <regex>
#include <sstream>

using namespace fano;
using nlohmann::json;

namespace {

// Minimal JSON-Schema checker covering exactly the keywords the shipped
// schema uses: type, enum, pattern, required, properties,
// additionalProperties (false), items. Throws with a path on violation.
void validate_schema(const json& schema, const json& value, const std::string& where) {
    auto fail = [&](const std::string& why) {
        throw std::runtime_error(where + ": " + why);
    };
    if (schema.contains("enum")) {
        for (const json& allowed : schema.at("enum"))
            if (value == allowed) return;
        fail("value " + value.dump() + " not in enum");
    }
    if (schema.contains("type")) {
        const std::string t = schema.at("type").get<std::string>();
        const bool ok = (t == "object" && value.is_object()) ||
                        (t == "array" && value.is_array()) ||
                        (t == "string" && value.is_string()) ||
                        (t == "integer" && value.is_number_integer()) ||
                        (t == "number" && value.is_number()) ||
                        (t == "boolean" && value.is_boolean());
        if (!ok) fail("expected type " + t + ", got " + value.dump());
    }
    if (schema.contains("pattern")) {
        const std::regex re(schema.at("pattern").get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            fail("value " + value.dump() + " does not match pattern");
    }
    if (schema.contains("required"))
        for (const json& key : schema.at("required"))
            if (!value.contains(key.get<std::string>()))
                fail("missing required field " + key.get<std::string>());
    if (schema.contains("properties")) {
        const json& props = schema.at("properties");
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key))
                validate_schema(props.at(key), sub, where + "." + key);
            else if (schema.contains("additionalProperties") &&
                     schema.at("additionalProperties") == false)
                fail("unexpected field " + key);
        }
    }
    if (schema.contains("items") && value.is_array()) {
        int i = 0;
        for (const json& item : value)
            validate_schema(schema.at("items"), item, where + "[" + std::to_string(i++) + "]");
    }
}

json load_schema() {
    std::ifstream in(FANO_SCHEMA_PATH);
    REQUIRE(in.good());
    return json::parse(in);
}

std::vector<AnalysisReport> sample_reports() {
    std::vector<AnalysisReport> reports;
    reports.push_back(analyze_polytope(
        FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}}), "p2"));
    for (int n = 1; n <= 6; ++n)
        reports.push_back(analyze_polytope(y_family(n), "y" + std::to_string(n)));
    for (int n = 2; n <= 5; ++n)
        reports.push_back(analyze_polytope(weighted_p11n(n), "p11" + std::to_string(n)));
    reports.push_back(analyze_polytope(rank1_triangle(3, 2), "r3"));
    reports.push_back(analyze_polytope(rank1_triangle(9, 2), "r9"));
    for (int d = 1; d <= 6; ++d)
        reports.push_back(analyze_polytope(xd_threefold(d), "x" + std::to_string(d)));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 50; ++i)
        reports.push_back(
            analyze_polytope(testing::random_fano_polygon(rng), "r" + std::to_string(i)));
    return reports;
}

} // namespace

TEST_CASE("surface reports carry the full invariant set") {
    const AnalysisReport p2 = analyze_polytope(
        FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}}), "p2.json");
    CHECK(p2.dim == 2);
    CHECK(p2.degree == 9);
    REQUIRE(p2.summary.has_value());
    CHECK(p2.summary->picard_rank == 1);
    REQUIRE(p2.ke.has_value());
    CHECK(p2.ke->ke_toric);
    REQUIRE(p2.singularities.has_value());
    CHECK(singularity_summary(*p2.singularities) == "none");
    REQUIRE(p2.smoothable.has_value());
    CHECK(*p2.smoothable);
    CHECK(*p2.bishop_surface == BoundVerdict::consistent);
    CHECK(*p2.bishop_degree == BoundVerdict::consistent);
    CHECK_FALSE(p2.conical.has_value());
    CHECK_FALSE(p2.conical_ratio.has_value());

    const AnalysisReport y2 = analyze_polytope(y_family(2), "y2.json");
    CHECK(y2.degree == 2);
    CHECK(y2.ke->ke_toric);
    CHECK(*y2.smoothable);
    CHECK(singularity_summary(*y2.singularities) == "2 x A_3 + 2 x 1/4(1,1)");
    // The two smoothing witnesses of the non-canonical points are (1, 2, 1).
    int witnesses = 0;
    for (const SingularityEntry& e : y2.singularities->entries)
        if (e.t_witness && !e.t_witness->canonical_flag) {
            CHECK(e.t_witness->d == 1);
            CHECK(e.t_witness->n == 2);
            CHECK(e.t_witness->a == 1);
            ++witnesses;
        }
    CHECK(witnesses == 2);

    const AnalysisReport p114 = analyze_polytope(weighted_p11n(4), "p114.json");
    CHECK_FALSE(p114.ke->ke_toric);
    CHECK(p114.ke->soliton_only);
    CHECK(*p114.bishop_surface == BoundVerdict::obstructed);
}

TEST_CASE("threefold reports carry degree and the conical bound only") {
    const AnalysisReport x5 = analyze_polytope(xd_threefold(5), "x5.json");
    CHECK(x5.dim == 3);
    CHECK(x5.degree == Rat(512, 5));
    CHECK_FALSE(x5.summary.has_value());
    CHECK_FALSE(x5.singularities.has_value());
    CHECK_FALSE(x5.ke.has_value());
    CHECK_FALSE(x5.smoothable.has_value());
    CHECK_FALSE(x5.bishop_surface.has_value());
    REQUIRE(x5.conical_ratio.has_value());
    CHECK(*x5.conical_ratio == Rat(1, 5));
    CHECK(*x5.conical == BoundVerdict::obstructed);

    const AnalysisReport x1 = analyze_polytope(xd_threefold(1), "x1.json");
    CHECK(x1.degree == 64);
    CHECK(*x1.conical_ratio == 1);
    CHECK(*x1.conical == BoundVerdict::consistent);
}

TEST_CASE("report JSON round-trips byte for byte") {
    for (const AnalysisReport& r : sample_reports()) {
        const std::string text = report_json(r);
        const AnalysisReport back = report_from_json(text);
        CHECK(report_json(back) == text);
        CHECK(back.degree == r.degree);
        CHECK(back.dim == r.dim);
        CHECK(back.vertices == r.vertices);
        CHECK(back.summary.has_value() == r.summary.has_value());
        if (r.summary) {
            CHECK(back.summary->picard_rank == r.summary->picard_rank);
            CHECK(back.summary->barycenter == r.summary->barycenter);
        }
        if (r.singularities) {
            REQUIRE(back.singularities.has_value());
            REQUIRE(back.singularities->entries.size() == r.singularities->entries.size());
            for (std::size_t i = 0; i < r.singularities->entries.size(); ++i) {
                const SingularityEntry& a = r.singularities->entries[i];
                const SingularityEntry& b = back.singularities->entries[i];
                CHECK(a.type.m == b.type.m);
                CHECK(a.type.q == b.type.q);
                CHECK(a.discrepancy == b.discrepancy);
                CHECK(a.t_witness == b.t_witness);
                CHECK(a.multiplicity == b.multiplicity);
            }
        }
    }
}

TEST_CASE("report parsing rejects malformed input") {
    CHECK_THROWS_AS(report_from_json("not json {"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(report_from_json(R"({"input": "x", "dim": 2, "vertices": 3, "degree": "9"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        report_from_json(R"({"input": "x", "dim": 2, "vertices": [], "degree": "9.5"})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        report_from_json(
            R"({"input": "x", "dim": 2, "vertices": [], "degree": "9", "smoothable": "yes"})"),
        std::invalid_argument);
}

TEST_CASE("every report validates against the shipped schema") {
    const json schema = load_schema();
    for (const AnalysisReport& r : sample_reports()) {
        const json doc = json::parse(report_json(r));
        CHECK_NOTHROW(validate_schema(schema, doc, r.input));
    }
    // The checker itself rejects off-schema documents.
    CHECK_THROWS(validate_schema(schema, json::parse(R"({"input": "x"})"), "missing"));
    CHECK_THROWS(validate_schema(
        schema,
        json::parse(
            R"({"input": "x", "dim": 4, "vertices": [], "degree": "9"})"),
        "bad dim"));
    CHECK_THROWS(validate_schema(
        schema,
        json::parse(
            R"({"input": "x", "dim": 2, "vertices": [], "degree": "0.5"})"),
        "decimal degree"));
    CHECK_THROWS(validate_schema(
        schema,
        json::parse(
            R"({"input": "x", "dim": 2, "vertices": [], "degree": "9", "extra": 1})"),
        "extra field"));
}

TEST_CASE("text rendering is exact and decimal-free") {
    const AnalysisReport y3 = analyze_polytope(y_family(3), "y3");
    const std::string text = report_text(y3);
    CHECK(text.find("degree:") != std::string::npos);
    CHECK(text.find("4/3") != std::string::npos);
    CHECK(text.find("2 x A_5 + 2 x 1/6(1,1)") != std::string::npos);
    CHECK(text.find("KE metric:        yes") != std::string::npos);
    CHECK(text.find('.') == std::string::npos);

    const AnalysisReport p114 = analyze_polytope(weighted_p11n(4), "p114");
    const std::string t2 = report_text(p114);
    CHECK(t2.find("no (Kahler-Ricci soliton only)") != std::string::npos);
    CHECK(t2.find("bishop (surface): obstructed") != std::string::npos);

    const AnalysisReport x5 = analyze_polytope(xd_threefold(5), "x5");
    const std::string t3 = report_text(x5);
    CHECK(t3.find("512/5") != std::string::npos);
    CHECK(t3.find("link ratio:       1/5") != std::string::npos);
    CHECK(t3.find("conical bound:    obstructed") != std::string::npos);
    CHECK(t3.find("picard") == std::string::npos);
}
