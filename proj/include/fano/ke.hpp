#pragma once

// Existence and obstruction tests for Kähler-Einstein orbifold metrics: the
// toric barycenter criterion, the surface Bishop-Gromov bound, the
// n-dimensional conical volume obstruction with its exact rational constants,
// link volume ratios of quasi-regular cones, Hilbert polynomials of
// anticanonical embeddings, and virtual moduli dimensions.

#include "fano/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

struct KEVerdict {
    bool ke_toric = false;    // Futaki invariant vanishes: KE metric exists
    bool soliton_only = false; // only a Kähler-Ricci soliton metric
    std::vector<std::string> notes;
};

// Obstruction inequalities report equality separately: the surface bound is
// proved strictly, the higher-dimensional one is stated non-strictly, and the
// library refuses to silently pick a side.
enum class BoundVerdict { consistent, obstructed, boundary };

std::string to_string(BoundVerdict v);

struct ObstructionInput {
    int n = 2;                          // complex dimension
    Rat degree;                         // (-K_X)^n
    Rat volume_ratio;                   // Vol(L_p) / Vol(S^{2n-1}(1)), in (0, 1]
    std::optional<Int> gorenstein_index;
};

// KE for toric Fanos is exactly the vanishing of the dual barycenter; a
// nonzero barycenter still carries a Kähler-Ricci soliton.
KEVerdict ke_toric_test(const FanoPolytope& P);

// Surfaces: |Γ_max| * deg(X) < 12 is necessary for a KE orbifold metric.
BoundVerdict bishop_gromov_surface(const Int& gamma_max, const Rat& degree);

// The exact constant 2^{n+1} (n!)^2 (2n-1)^n / (2n)! bounding
// deg(X) * Vol(S^{2n-1}) / Vol(L_p); the sphere-volume pi factors cancel.
// Values 2, 12, 100, 5488/5 for n = 1..4.
Rat obstruction_rhs(int n);

// Obstructed iff degree / volume_ratio exceeds obstruction_rhs(n).
BoundVerdict conical_obstruction(const ObstructionInput& input);

// Link volume ratio of a quasi-regular cone: index * c1_power / n^n, where
// c1_power integrates c1^{n-1} over the quotient base.
Rat quasi_regular_ratio(int n, const Int& index, const Rat& c1_power);

// deg(X) <= (n+1)^{n+1} / index, the Bishop volume bound.
BoundVerdict bishop_degree_bound(int n, const Int& index, const Rat& degree);

// Anticanonical Hilbert polynomial: k(k+1)/2 * deg + 1 for surfaces,
// (k^3/6 + k^2/4 + k/12) * deg + 2k + 1 for threefolds.
Rat hilbert_polynomial(int n, const Rat& degree, const Int& k);

// Virtual moduli dimension: 10 - 2*deg for surfaces;
// 18 - rho + (b3 - deg)/2 for threefolds (rho and b3 required).
Rat virtual_dim(int n, const Rat& degree, std::optional<int> rho = std::nullopt,
                std::optional<int> b3 = std::nullopt);

} // namespace fano
