#pragma once

// Per-variety analysis reports: assembly from a polytope, JSON round-trip
// with rationals as "p/q" strings, and a plain-text rendering. Surface
// reports carry the full invariant set; threefold reports carry the degree
// and the conical volume-bound fields only.

#include "fano/ke.hpp"
#include "fano/singularities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

struct AnalysisReport {
    std::string input;          // file path, "file:line", or caller label
    int dim = 2;
    std::vector<Vec> vertices;  // the analyzed polytope
    Rat degree;

    // Surface fields (dim 2).
    std::optional<PolytopeSummary> summary;
    std::optional<SingularityReport> singularities;
    std::optional<KEVerdict> ke;
    std::optional<bool> smoothable;
    std::optional<BoundVerdict> bishop_surface; // |Gamma_max| * deg vs 12
    std::optional<BoundVerdict> bishop_degree;  // deg vs 27 / gorenstein index

    // Threefold fields (dim 3).
    std::optional<Rat> conical_ratio;     // link volume ratio 1/Gamma_max
    std::optional<BoundVerdict> conical;  // deg / ratio vs the n=3 constant

    std::vector<std::string> notes;
};

// Full report for a surface; degree plus conical volume bound (at the link
// ratio of the worst facet cone) for a threefold.
AnalysisReport analyze_polytope(const FanoPolytope& P, std::string input_id);

// Single-line JSON with deterministic key order; parsing it back and
// re-serializing reproduces the line byte for byte.
std::string report_json(const AnalysisReport& r);
AnalysisReport report_from_json(const std::string& text);

// Aligned key/value table; every rational rendered as "p/q", never decimal.
std::string report_text(const AnalysisReport& r);

// "none", or counts by type in order of first appearance,
// e.g. "2 x A_3 + 2 x 1/4(1,1)".
std::string singularity_summary(const SingularityReport& report);

} // namespace fano
