#pragma once

// Fano polytopes (primitive vertices, origin strictly interior), their dual
// polytopes, and the derived toric invariants: anticanonical degree (by two
// independent formulas), barycenter, Ehrhart counts of dilates, Gorenstein
// index, Picard rank, and a GL(2,Z) canonical form for 2D classification.

#include "fano/lattice.hpp"

#include <vector>

namespace fano {

class FanoPolytope {
public:
    // Validates and canonicalizes a vertex set. 2D: computes the convex hull
    // (points interior to the hull are dropped as redundant), requires >= 3
    // hull vertices, every hull vertex primitive, the origin strictly
    // interior, and stores vertices in counterclockwise order starting from
    // the lexicographically smallest. 3D: accepts exactly four points forming
    // a simplex with primitive vertices and the origin strictly interior.
    static FanoPolytope make_fano(const std::vector<Vec>& raw_vertices);

    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }

    bool operator==(const FanoPolytope& other) const {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

private:
    FanoPolytope(int dim, std::vector<Vec> vertices)
        : dim_(dim), vertices_(std::move(vertices)) {}
    int dim_;
    std::vector<Vec> vertices_;
};

// The dual polytope P^v = { y : <y,x> >= -1 for all x in P }. Also keeps the
// primal vertices: they are exactly the facet normals of the dual, which makes
// membership tests in dilates k*P^v exact and trivial.
struct DualPolytope {
    int dim;
    std::vector<QVec> vertices;      // 2D: counterclockwise
    std::vector<Vec> facet_normals;  // the primal vertices v: <y,v> >= -1
};

struct PolytopeSummary {
    Rat degree;
    int picard_rank;
    Int gorenstein_index;
    bool reflexive;
    QVec barycenter;
};

DualPolytope dual(const FanoPolytope& P);

// Exact Euclidean volume: 2D shoelace / 3D simplex determinant.
Rat volume(const DualPolytope& Q);

// deg(X_P) = (dim)! * Vol(P^v).
Rat degree(const FanoPolytope& P);

// 2D only: deg = sum over cyclic vertex triples of
//   2/det(v_{i-1},v_i) - det(v_{i-1},v_{i+1}) / (det(v_{i-1},v_i)*det(v_i,v_{i+1}))
// with all determinants signed (consecutive ones are positive in
// counterclockwise order). Always agrees with degree(); the dual-volume route
// is authoritative.
Rat degree_edge_formula(const FanoPolytope& P);

// Exact centroid of the dual polytope (triangulated from the interior origin).
QVec barycenter(const DualPolytope& Q);

// Number of lattice points in the dilate k*Q, i.e. dim H^0(-k K) for Q = P^v.
Int ehrhart_count(const DualPolytope& Q, const Int& k);

// Smallest l >= 1 such that l*P^v has integer vertices.
Int gorenstein_index(const FanoPolytope& P);

// Number of vertices minus dimension (simplicial polytopes).
int picard_rank(const FanoPolytope& P);

// 2D only: a canonical representative of the GL(2,Z) orbit of P, computed by
// mapping each minimal-determinant edge to a fixed normalized position and
// taking the lexicographically smallest resulting vertex matrix over both
// orientations.
FanoPolytope normal_form(const FanoPolytope& P);

PolytopeSummary summarize(const FanoPolytope& P);

// Named families.
FanoPolytope weighted_p11n(const Int& n);                 // P(1,1,n)
FanoPolytope y_family(const Int& n);                      // Y_n
FanoPolytope rank1_triangle(const Int& k, const Int& l);  // Picard-rank-1 triangles
FanoPolytope xd_threefold(const Int& d);                  // the 3-fold family X_d

} // namespace fano
