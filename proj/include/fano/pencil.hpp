#pragma once

// Pencils of quadric hypersurfaces with exact rational Gram matrices, their
// discriminant binary forms, and the stability dictionary for intersections
// of two quadrics. For quartic Del Pezzo surfaces (size 5) and their P^5
// analogues (size 6) the verdict follows the eigenvalue-multiplicity
// dictionary; every other size falls back to the generic binary-form rule
// applied to the discriminant.

#include "fano/binary_form.hpp"
#include "fano/lattice.hpp"

#include <iosfwd>

namespace fano {

// Two symmetric Gram matrices spanning the pencil lambda*A + mu*B. Build
// through make_pencil, which enforces the invariants; the defensive
// degenerate branch in pencil_stability only triggers for hand-rolled
// aggregates that bypass it.
struct QuadricPencil {
    int size = 0;
    std::vector<QVec> A;
    std::vector<QVec> B;
};

// Validates: both matrices square, symmetric, of equal size >= 3, and
// det(lambda*A + mu*B) not identically zero. Throws std::invalid_argument.
QuadricPencil make_pencil(std::vector<QVec> A, std::vector<QVec> B);

// Reads {"size": k, "A": [[...]], "B": [[...]]} with entries given as
// integers or "p/q" strings. Throws std::invalid_argument on malformed
// input or on a pencil violating the invariants above.
QuadricPencil load_pencil(std::istream& in);

// Determinant by fraction-free-ordered Gaussian elimination, exact over Q.
Rat det_rat(std::vector<QVec> m);

// det(lambda*A + mu*B) as a degree-size binary form, recovered exactly by
// interpolation at size+1 rational nodes.
BinaryForm discriminant_form(const QuadricPencil& p);

// GIT stability of the intersection of the two quadrics, decided entirely
// by the multiplicity profile of the discriminant:
//   size 5: stable iff all roots simple; strictly polystable iff the largest
//           multiplicity is 2; unstable from multiplicity 3 on.
//   size 6: as for size 5, except that a discriminant splitting into two
//           roots of multiplicity 3 is strictly polystable.
//   other sizes: the generic binary-form rule.
GITVerdict pencil_stability(const QuadricPencil& p);

} // namespace fano
