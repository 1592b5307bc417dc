#include "fano/binary_form.hpp"

#include <stdexcept>
#include <utility>

namespace fano {

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rat(static_cast<long>(i));
    return poly_trim(std::move(out));
}

namespace {

Poly poly_monic(Poly p) {
    if (p.empty()) return p;
    const Rat lead = p.back();
    for (Rat& c : p) c /= lead;
    return p;
}

Poly poly_neg(Poly p) {
    for (Rat& c : p) c = -c;
    return p;
}

// Remainder of a modulo b (b nonzero), with the quotient optionally captured.
Poly poly_divmod(Poly a, const Poly& b, Poly* quotient) {
    if (b.empty()) throw std::logic_error("poly_divmod: division by zero polynomial");
    Poly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        const Rat factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a = poly_trim(std::move(a));
    }
    if (quotient) *quotient = poly_trim(std::move(q));
    return a;
}

} // namespace

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(std::move(a), b, nullptr);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    Poly q;
    Poly r = poly_divmod(a, b, &q);
    if (!r.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

BinaryForm BinaryForm::make(int degree, std::vector<Rat> coeffs) {
    if (degree < 1) throw std::invalid_argument("BinaryForm: degree must be at least 1");
    if (coeffs.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: expected degree+1 coefficients");
    bool nonzero = false;
    for (const Rat& c : coeffs)
        if (c != 0) { nonzero = true; break; }
    if (!nonzero) throw std::invalid_argument("BinaryForm: all coefficients vanish");
    return BinaryForm{degree, std::move(coeffs)};
}

int MultiplicityProfile::max_multiplicity() const {
    int m = 0;
    for (const ProfilePart& part : parts) m = std::max(m, part.multiplicity);
    return m;
}

bool MultiplicityProfile::all_multiplicity(int m) const {
    if (parts.empty()) return false;
    for (const ProfilePart& part : parts)
        if (part.multiplicity != m) return false;
    return true;
}

MultiplicityProfile multiplicity_profile(const BinaryForm& f) {
    MultiplicityProfile profile;
    profile.degree = f.degree;

    // Dehomogenize at mu = 1; the lost degree is the multiplicity at infinity.
    Poly g = poly_trim(f.coeffs);
    const int at_infinity = f.degree - poly_deg(g);

    if (poly_deg(g) >= 1) {
        // Yun's algorithm: peel the squarefree factor of each multiplicity in
        // one gcd cascade (characteristic zero, so no multiplicity is lost).
        g = poly_monic(std::move(g));
        const Poly dg = poly_derivative(g);
        const Poly a0 = poly_gcd(g, dg);
        Poly b = poly_div_exact(g, a0);
        Poly d = poly_add(poly_div_exact(dg, a0), poly_neg(poly_derivative(b)));
        for (int i = 1; poly_deg(b) >= 1; ++i) {
            Poly factor = poly_gcd(b, d);
            if (poly_deg(factor) >= 1)
                profile.parts.push_back({i, poly_deg(factor), factor, false});
            b = poly_div_exact(b, factor);
            Poly c = poly_div_exact(d, factor);
            d = poly_add(c, poly_neg(poly_derivative(b)));
        }
    }
    if (at_infinity > 0) profile.parts.push_back({at_infinity, 1, {}, true});
    return profile;
}

std::string to_string(GITClass c) {
    switch (c) {
        case GITClass::stable: return "stable";
        case GITClass::strictly_polystable: return "strictly_polystable";
        case GITClass::semistable_not_polystable: return "semistable_not_polystable";
        case GITClass::unstable: return "unstable";
    }
    throw std::logic_error("to_string: unknown GIT class");
}

bool is_polystable(GITClass c) {
    return c == GITClass::stable || c == GITClass::strictly_polystable;
}

bool is_semistable(GITClass c) { return c != GITClass::unstable; }

GITVerdict binary_form_stability(const BinaryForm& f) {
    const MultiplicityProfile profile = multiplicity_profile(f);
    const int d = f.degree;
    const int m = profile.max_multiplicity();
    if (2 * m < d)
        return {GITClass::stable,
                "maximum root multiplicity " + std::to_string(m) + " is below " +
                    std::to_string(d) + "/2"};
    if (2 * m > d)
        return {GITClass::unstable,
                "a root of multiplicity " + std::to_string(m) + " exceeds " +
                    std::to_string(d) + "/2"};
    // Threshold case: polystable only for two distinct roots of multiplicity
    // d/2 (the sum of multiplicities then forces exactly two of them).
    if (profile.all_multiplicity(m))
        return {GITClass::strictly_polystable,
                "two distinct roots of multiplicity " + std::to_string(m)};
    return {GITClass::semistable_not_polystable,
            "a root of multiplicity " + std::to_string(m) +
                " not matched by a second root of the same multiplicity"};
}

} // namespace fano
