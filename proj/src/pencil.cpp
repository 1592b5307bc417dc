#include "fano/pencil.hpp"

#include "json.hpp"

#include <istream>
#include <stdexcept>
#include <utility>

namespace fano {

namespace {

// det(t*A + B) for a rational parameter value.
Rat det_at(const QuadricPencil& p, const Rat& t) {
    std::vector<QVec> m(p.size, QVec(p.size));
    for (int i = 0; i < p.size; ++i)
        for (int j = 0; j < p.size; ++j) m[i][j] = t * p.A[i][j] + p.B[i][j];
    return det_rat(std::move(m));
}

// Coefficients of det(t*A + B) as a polynomial in t, by Lagrange
// interpolation at t = 0, 1, ..., size. Identically {} for a degenerate
// pencil. The binary form det(lambda*A + mu*B) has the same coefficients:
// the lambda^i mu^(size-i) coefficient is the t^i one.
Poly discriminant_poly(const QuadricPencil& p) {
    const int n = p.size;
    Poly result;
    for (int k = 0; k <= n; ++k) {
        const Rat yk = det_at(p, Rat(k));
        if (yk == 0) continue;
        Poly basis{Rat(1)};
        Rat denom(1);
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            basis = poly_mul(basis, Poly{Rat(-j), Rat(1)});
            denom *= Rat(k - j);
        }
        const Rat scale = yk / denom;
        for (Rat& c : basis) c *= scale;
        result = poly_add(result, basis);
    }
    return result;
}

void check_pencil_shape(const std::vector<QVec>& m, int size, const char* name) {
    if (static_cast<int>(m.size()) != size)
        throw std::invalid_argument(std::string("make_pencil: ") + name +
                                    " has the wrong number of rows");
    for (const QVec& row : m)
        if (static_cast<int>(row.size()) != size)
            throw std::invalid_argument(std::string("make_pencil: ") + name +
                                        " is not square");
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (m[i][j] != m[j][i])
                throw std::invalid_argument(std::string("make_pencil: ") + name +
                                            " is not symmetric");
}

Rat json_rat(const nlohmann::json& v) {
    if (v.is_string()) return parse_rat(v.get<std::string>());
    if (v.is_number_integer()) return Rat(Int(v.get<std::int64_t>()));
    throw std::invalid_argument(
        "load_pencil: matrix entries must be integers or \"p/q\" strings");
}

std::vector<QVec> json_matrix(const nlohmann::json& v, const char* name) {
    if (!v.is_array())
        throw std::invalid_argument(std::string("load_pencil: ") + name +
                                    " must be an array of rows");
    std::vector<QVec> m;
    for (const nlohmann::json& row : v) {
        if (!row.is_array())
            throw std::invalid_argument(std::string("load_pencil: ") + name +
                                        " rows must be arrays");
        QVec r;
        for (const nlohmann::json& entry : row) r.push_back(json_rat(entry));
        m.push_back(std::move(r));
    }
    return m;
}

} // namespace

Rat det_rat(std::vector<QVec> m) {
    const int n = static_cast<int>(m.size());
    Rat det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const Rat factor = m[row][col] / m[col][col];
            for (int j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return det;
}

QuadricPencil make_pencil(std::vector<QVec> A, std::vector<QVec> B) {
    const int size = static_cast<int>(A.size());
    if (size < 3) throw std::invalid_argument("make_pencil: size must be at least 3");
    check_pencil_shape(A, size, "A");
    check_pencil_shape(B, size, "B");
    QuadricPencil p{size, std::move(A), std::move(B)};
    if (discriminant_poly(p).empty())
        throw std::invalid_argument(
            "make_pencil: degenerate pencil, det(lambda*A + mu*B) vanishes identically");
    return p;
}

QuadricPencil load_pencil(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("load_pencil: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("A") || !doc.contains("B"))
        throw std::invalid_argument("load_pencil: expected an object with size, A, and B");
    if (!doc["size"].is_number_integer())
        throw std::invalid_argument("load_pencil: size must be an integer");
    const int size = doc["size"].get<int>();
    std::vector<QVec> A = json_matrix(doc["A"], "A");
    std::vector<QVec> B = json_matrix(doc["B"], "B");
    if (static_cast<int>(A.size()) != size)
        throw std::invalid_argument("load_pencil: size does not match the matrix dimensions");
    return make_pencil(std::move(A), std::move(B));
}

BinaryForm discriminant_form(const QuadricPencil& p) {
    Poly d = discriminant_poly(p);
    if (d.empty())
        throw std::invalid_argument("discriminant_form: degenerate pencil");
    d.resize(static_cast<std::size_t>(p.size) + 1, Rat(0));
    return BinaryForm::make(p.size, std::move(d));
}

GITVerdict pencil_stability(const QuadricPencil& p) {
    const Poly d = discriminant_poly(p);
    if (d.empty())
        return {GITClass::unstable,
                "degenerate pencil: the discriminant vanishes identically"};
    Poly coeffs = d;
    coeffs.resize(static_cast<std::size_t>(p.size) + 1, Rat(0));
    const BinaryForm disc = BinaryForm::make(p.size, std::move(coeffs));
    if (p.size != 5 && p.size != 6) return binary_form_stability(disc);

    const MultiplicityProfile profile = multiplicity_profile(disc);
    const int m = profile.max_multiplicity();
    if (m == 1)
        return {GITClass::stable,
                "all eigenvalues of the pencil are distinct (simple discriminant roots)"};
    if (m == 2)
        return {GITClass::strictly_polystable,
                "diagonalizable with equal eigenvalues only in pairs "
                "(largest discriminant root multiplicity 2)"};
    if (p.size == 6 && m == 3 && profile.all_multiplicity(3))
        return {GITClass::strictly_polystable,
                "the discriminant splits into two distinct roots of multiplicity 3"};
    return {GITClass::unstable, "a discriminant root of multiplicity " +
                                    std::to_string(m) + " (at least 3)"};
}

} // namespace fano
