#pragma once

// Binary forms over the rationals, exact squarefree multiplicity profiles
// (Yun's gcd cascade, no root isolation), and Hilbert-Mumford stability of
// point configurations on the projective line. Root multiplicities are the
// only data any verdict depends on, so irrational and complex roots are
// handled implicitly through squarefree factors.

#include "fano/rational.hpp"

#include <string>
#include <vector>

namespace fano {

// Dense univariate polynomial over Q: coefficients by ascending degree with
// no trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

int poly_deg(const Poly& p); // -1 for the zero polynomial
Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
// Monic greatest common divisor (Euclid); gcd(p, 0) is monic p.
Poly poly_gcd(Poly a, Poly b);
// Exact quotient; throws std::logic_error if the division leaves a remainder.
Poly poly_div_exact(const Poly& a, const Poly& b);

// Homogeneous form of degree d in (lambda, mu): coefficients[i] multiplies
// lambda^i mu^(d-i). Not all coefficients may vanish.
struct BinaryForm {
    int degree = 0;
    std::vector<Rat> coeffs;

    static BinaryForm make(int degree, std::vector<Rat> coeffs);
};

// One squarefree layer of the form: the (monic, pairwise coprime) factor
// collecting every root of the given multiplicity. The root at infinity
// (mu = 0) is carried as its own degree-1 part with an empty factor.
struct ProfilePart {
    int multiplicity = 1;
    int degree = 0;
    Poly factor;
    bool at_infinity = false;
};

struct MultiplicityProfile {
    int degree = 0;
    std::vector<ProfilePart> parts; // by multiplicity; infinity part last

    int max_multiplicity() const;
    // True iff every root has exactly the given multiplicity.
    bool all_multiplicity(int m) const;
};

// Squarefree decomposition of the dehomogenization f(x, 1) plus the mu-adic
// valuation (multiplicity of the root at infinity). The multiplicities times
// part degrees always sum to the form's degree.
MultiplicityProfile multiplicity_profile(const BinaryForm& f);

enum class GITClass { stable, strictly_polystable, semistable_not_polystable, unstable };

std::string to_string(GITClass c);
bool is_polystable(GITClass c);  // stable or strictly polystable
bool is_semistable(GITClass c);  // anything but unstable

struct GITVerdict {
    GITClass verdict = GITClass::unstable;
    std::string witness;
};

// The Hilbert-Mumford rule for degree-d point configurations on P^1:
// stable iff every multiplicity is below d/2, unstable iff some multiplicity
// exceeds d/2, and at the d/2 threshold strictly polystable exactly for two
// distinct roots of multiplicity d/2 (else semistable but not polystable).
GITVerdict binary_form_stability(const BinaryForm& f);

} // namespace fano
