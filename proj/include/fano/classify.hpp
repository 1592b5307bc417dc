#pragma once

// Exhaustive classification runs over Fano polygons: the Picard-rank-1
// triangle scan, bounded-Gorenstein-index enumeration of log del Pezzo
// polygons up to unimodular equivalence with barycenter / smoothability
// filters, verifiers for the named surface tables, and JSON-lines
// persistence of classified surfaces.

#include "fano/ke.hpp"
#include "fano/polytope.hpp"
#include "fano/singularities.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace fano {

struct EnumerationConfig {
    int max_index = 1;
    int coordinate_box = 3;
    bool stabilization_check = false;
};

// Smallest coordinate_box accepted for a given index bound. The floors are
// set empirically; the stabilization check re-runs the search with the box
// enlarged by one and warns if any new class appears.
int coordinate_box_floor(int max_index);

struct ClassifiedSurface {
    FanoPolytope polytope; // normal form
    PolytopeSummary summary;
    SingularityReport singularities;
    KEVerdict ke;
    bool smoothable = false; // every edge cone smooth or with a T-witness
};

// Normalizes P and attaches the full analysis.
ClassifiedSurface classify_surface(const FanoPolytope& P);

// All Fano polygons with gorenstein_index <= max_index realizable with
// vertices in [-box, box]^2, one normal form per unimodular equivalence
// class, sorted by degree (descending), Picard rank, vertex count, and
// vertex list. With stabilization_check set, the search is repeated with
// the box enlarged by one and a warning is written to stderr if that finds
// classes the configured box missed.
std::vector<ClassifiedSurface> enumerate_ldp(const EnumerationConfig& config);

// The bare polygon enumeration behind enumerate_ldp: sorted normal forms,
// no analysis attached.
std::vector<FanoPolytope> enumerate_ldp_polytopes(int max_index, int box);

// Surfaces whose dual barycenter vanishes (the Kahler-Einstein ones).
std::vector<ClassifiedSurface> filter_barycenter_zero(const std::vector<ClassifiedSurface>& in);
// Surfaces with every singular point Q-Gorenstein smoothable.
std::vector<ClassifiedSurface> filter_all_t(const std::vector<ClassifiedSurface>& in);

// The Picard-rank-1 classification: scans rank1_triangle(k, l) over the
// degrees 9/k that are positive integers (k = 1, 3, 9) and all admissible
// shears l, reduces by normal form, and returns exactly three classes.
std::vector<ClassifiedSurface> classify_rank1();

// One row of the degree table of Kahler-Einstein surfaces with smoothable
// singularities (degrees 9, 8, 6, 4, 3, 2, 1).
struct TableRow {
    std::string name;
    ClassifiedSurface surface;
};

// Builds the seven table surfaces and checks each against its stated degree
// and Picard rank, plus vanishing barycenter and smoothability everywhere.
// Throws std::logic_error naming the surface and the failing property.
std::vector<TableRow> verify_classification_table();

struct YFamilyRow {
    Int n{1};
    Rat degree;
    Rat min_discrepancy;
    bool mumford_unstable = false;
};

// Checks Y_1 .. Y_{n_max}: degree 4/n, singularities 2 x 1/2n(1,1) plus
// 2 x A_{2n-1}, minimal discrepancy -1 + 1/n, vanishing barycenter, and the
// multiplicity obstruction to asymptotic Chow semistability exactly for
// n >= 4. Throws std::logic_error naming n and the failing property.
std::vector<YFamilyRow> verify_y_family(int n_max);

// One surface per line: vertices, summary, singularity entries, verdicts.
void save_jsonl(const std::vector<ClassifiedSurface>& surfaces, std::ostream& out);

// Reads the format written by save_jsonl (only the "vertices" field is
// required, so externally produced polygon lists can be ingested) and
// re-analyzes every polygon from scratch.
std::vector<ClassifiedSurface> load_jsonl(std::istream& in);

} // namespace fano
