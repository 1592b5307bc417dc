#pragma once

// Lattice vectors, 2x2 determinants, unimodular maps, and the normal form of
// two-dimensional lattice cones as cyclic quotient singularities 1/m(1,q).

#include "fano/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace fano {

// A point of the lattice N = Z^n (n = 2 or 3 in this library).
using Vec = std::vector<Int>;
// A point of M (x) R with exact rational coordinates.
using QVec = std::vector<Rat>;

Int dot(const Vec& a, const Vec& b);
Rat dot(const QVec& a, const Vec& b);

// True iff the gcd of all coordinates is 1. Rejects the zero vector.
bool is_primitive(const Vec& v);

// a_x * b_y - a_y * b_x. Both vectors must be 2-dimensional.
Int det2(const Vec& a, const Vec& b);
Rat det2q(const QVec& a, const QVec& b);

// An element of GL(n, Z): an integer matrix with determinant +1 or -1.
struct UnimodularMap {
    std::vector<Vec> rows; // row-major n x n

    explicit UnimodularMap(std::vector<Vec> rows_);
    int dim() const { return static_cast<int>(rows.size()); }
    Int determinant() const;
};

// Matrix-vector product. Unimodularity makes this a lattice automorphism, so
// primitive vectors stay primitive.
Vec apply_map(const UnimodularMap& U, const Vec& v);

// The normal form of a 2D cone singularity: C^2 / Z_m acting with weights
// (1, q). m = 1 (with q = 0) encodes a smooth cone. For m > 1, q is the
// canonical representative min(q, q^{-1} mod m), since 1/m(1,q) and
// 1/m(1,q^{-1}) are the same singularity with the coordinate roles swapped.
struct CyclicQuotientType {
    Int m{1};
    Int q{0};

    bool smooth() const { return m == 1; }
    // A_k means 1/(k+1)(1,k); with the min-representative convention the
    // stored q of A_k is m-1 (self-inverse mod m).
    bool is_canonical_A() const { return m > 1 && q == m - 1; }

    // "smooth", "A_k", or "1/m(1,q)".
    std::string label() const;

    auto operator<=>(const CyclicQuotientType&) const = default;
};

// Classifies the cone spanned by primitive, linearly independent rays v0, v1
// in Z^2. Symmetric in its arguments; invariant under GL(2,Z).
CyclicQuotientType cone_normal_form(const Vec& v0, const Vec& v1);

} // namespace fano
