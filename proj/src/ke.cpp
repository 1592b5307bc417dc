#include "fano/ke.hpp"

namespace fano {

std::string to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::consistent: return "consistent";
        case BoundVerdict::obstructed: return "obstructed";
        case BoundVerdict::boundary: return "boundary";
    }
    throw std::logic_error("to_string: unknown verdict");
}

KEVerdict ke_toric_test(const FanoPolytope& P) {
    QVec b = barycenter(dual(P));
    bool zero = true;
    for (const Rat& c : b)
        if (c != 0) zero = false;
    KEVerdict v;
    v.ke_toric = zero;
    v.soliton_only = !zero;
    v.notes.push_back(zero ? "dual barycenter vanishes: Kahler-Einstein orbifold metric exists"
                           : "dual barycenter nonzero: Kahler-Ricci soliton only");
    return v;
}

BoundVerdict bishop_gromov_surface(const Int& gamma_max, const Rat& degree) {
    if (gamma_max < 1 || degree <= 0)
        throw std::invalid_argument("bishop_gromov_surface: need gamma_max >= 1 and degree > 0");
    Rat product = Rat(gamma_max) * degree;
    if (product > 12) return BoundVerdict::obstructed;
    if (product == 12) return BoundVerdict::boundary;
    return BoundVerdict::consistent;
}

Rat obstruction_rhs(int n) {
    if (n < 1) throw std::invalid_argument("obstruction_rhs: n >= 1 required");
    Int nf = factorial(n);
    Int num = nf * nf;
    for (int i = 0; i < n + 1; ++i) num *= 2;
    for (int i = 0; i < n; ++i) num *= 2 * n - 1;
    return make_rat(num, factorial(2 * n));
}

BoundVerdict conical_obstruction(const ObstructionInput& input) {
    if (input.n < 1) throw std::invalid_argument("conical_obstruction: n >= 1 required");
    if (input.degree <= 0) throw std::invalid_argument("conical_obstruction: degree must be positive");
    if (input.volume_ratio <= 0 || input.volume_ratio > 1)
        throw std::invalid_argument("conical_obstruction: volume ratio must lie in (0, 1]");
    Rat lhs = input.degree / input.volume_ratio;
    Rat rhs = obstruction_rhs(input.n);
    if (lhs > rhs) return BoundVerdict::obstructed;
    if (lhs == rhs) return BoundVerdict::boundary;
    return BoundVerdict::consistent;
}

Rat quasi_regular_ratio(int n, const Int& index, const Rat& c1_power) {
    if (n < 2) throw std::invalid_argument("quasi_regular_ratio: n >= 2 required");
    if (index < 1 || c1_power <= 0)
        throw std::invalid_argument("quasi_regular_ratio: index and c1 power must be positive");
    Int nn = 1;
    for (int i = 0; i < n; ++i) nn *= n;
    return Rat(index) * c1_power / Rat(nn);
}

BoundVerdict bishop_degree_bound(int n, const Int& index, const Rat& degree) {
    if (n < 2) throw std::invalid_argument("bishop_degree_bound: n >= 2 required");
    if (index < 1 || degree <= 0)
        throw std::invalid_argument("bishop_degree_bound: index and degree must be positive");
    Int np = 1;
    for (int i = 0; i < n + 1; ++i) np *= (n + 1);
    Rat bound = Rat(np) / Rat(index);
    if (degree > bound) return BoundVerdict::obstructed;
    if (degree == bound) return BoundVerdict::boundary;
    return BoundVerdict::consistent;
}

Rat hilbert_polynomial(int n, const Rat& degree, const Int& k) {
    if (k < 0) throw std::invalid_argument("hilbert_polynomial: k >= 0 required");
    Rat kk(k);
    if (n == 2) return kk * (kk + 1) / 2 * degree + 1;
    if (n == 3)
        return (kk * kk * kk / 6 + kk * kk / 4 + kk / 12) * degree + 2 * kk + 1;
    throw std::invalid_argument("hilbert_polynomial: dimension must be 2 or 3");
}

Rat virtual_dim(int n, const Rat& degree, std::optional<int> rho, std::optional<int> b3) {
    if (n == 2) return 10 - 2 * degree;
    if (n == 3) {
        if (!rho || !b3)
            throw std::invalid_argument("virtual_dim: threefolds need rho and b3");
        return 18 - Rat(*rho) + (Rat(*b3) - degree) / 2;
    }
    throw std::invalid_argument("virtual_dim: dimension must be 2 or 3");
}

} // namespace fano
