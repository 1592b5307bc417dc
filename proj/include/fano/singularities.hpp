#pragma once

// Per-cone singularity analysis for Fano polygons: cyclic quotient types on
// the edges, Hirzebruch-Jung resolutions and discrepancies, T-singularity
// witnesses and Q-Gorenstein deformation dimensions, Hilbert-Samuel
// multiplicities, and the factorial multiplicity bound for asymptotic Chow
// stability.

#include "fano/polytope.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fano {

// Data certifying that 1/m(1,q) admits a Q-Gorenstein smoothing: either the
// quotient of order m = d*n^2 with weights (1, d*n*a - 1), gcd(n, a) = 1, or a
// canonical (Du Val) A_{m-1} point, which is flagged and carries the witness
// (d, n, a) = (m, 1, 1).
struct TSingularityWitness {
    Int d{1};
    Int n{1};
    Int a{1};
    bool canonical_flag = false;

    bool operator==(const TSingularityWitness&) const = default;
};

struct SingularityEntry {
    int edge_index = 0;
    CyclicQuotientType type;
    std::optional<Rat> discrepancy;              // absent on smooth edges
    std::optional<TSingularityWitness> t_witness; // absent if not smoothable
    Int multiplicity{1};
    std::optional<Int> qg_def_dim;               // absent for non-T types
};

struct SingularityReport {
    std::vector<SingularityEntry> entries;
    Int gamma_max{1};                   // largest group order (1 if smooth)
    std::optional<Rat> min_discrepancy; // absent on smooth surfaces

    // Every point smooth or Q-Gorenstein smoothable: the surface then admits
    // a global Q-Gorenstein smoothing.
    bool all_t_or_smooth() const;
    Int max_multiplicity() const;
};

// One entry per edge cone of the polygon, in vertex order.
SingularityReport classify_edges(const FanoPolytope& P);

// Hirzebruch-Jung continued fraction m/q = b_1 - 1/(b_2 - 1/(...)), b_i >= 2:
// the negatives of the self-intersections along the minimal resolution chain.
// Requires m > 1, 0 < q < m, gcd(m, q) = 1.
std::vector<Int> hj_expansion(const Int& m, const Int& q);

// Minimal discrepancy of the quotient singularity: min over the exceptional
// rays w of the minimal resolution of l(w) - 1, where l is the linear
// functional equal to 1 on both primitive generators of the cone. Absent for
// smooth points. Always in (-1, 1); zero exactly for the Du Val types.
std::optional<Rat> discrepancy(const CyclicQuotientType& t);

// Witness search over both representatives of q. Absent for smooth points and
// for quotients admitting no Q-Gorenstein smoothing.
std::optional<TSingularityWitness> is_t_singularity(const CyclicQuotientType& t);

// Dimension of the Q-Gorenstein deformation space: d for a witness
// (d, n, a) with n >= 2, and k for the canonical A_k (one parameter per
// monomial deformation of xy = z^{k+1}). Absent for non-T types and smooth.
std::optional<Int> qg_deformation_dim(const CyclicQuotientType& t);

// Minimal generators (Hilbert basis) of the invariant monoid
// {(i, j) : i + q*j = 0 mod m}: the embedding variables of the singularity.
std::vector<std::pair<Int, Int>> invariant_monoid_generators(const CyclicQuotientType& t);

// Hilbert-Samuel multiplicity of the local ring: stabilized second difference
// of k -> dim O/m_p^k, counted on the invariant monoid. 1 for smooth points,
// 2 for A_k, d for the cone over the degree-d rational normal curve.
Int multiplicity(const CyclicQuotientType& t);

// True iff some point violates Mumford's bound Mult(p) <= (complex_dim + 1)!,
// which rules out asymptotic Chow semistability.
bool mumford_instability(const SingularityReport& report, int complex_dim);

} // namespace fano
