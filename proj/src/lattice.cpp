#include "fano/lattice.hpp"

#include <sstream>

namespace fano {

Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return boost::multiprecision::abs(a);
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int x, y;
    Int g = ext_gcd(mod_pos(a, m), m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return mod_pos(x, m);
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int floor_rat(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return q;
}

Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        if (slash == std::string::npos) return Rat(Int(s));
        std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
        if (ps.empty() || qs.empty()) throw std::invalid_argument("empty part");
        return make_rat(Int(ps), Int(qs));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const QVec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

bool is_primitive(const Vec& v) {
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    if (g == 0) throw std::invalid_argument("is_primitive: zero vector");
    return g == 1;
}

Int det2(const Vec& a, const Vec& b) {
    if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("det2: vectors must be 2-dimensional");
    return a[0] * b[1] - a[1] * b[0];
}

Rat det2q(const QVec& a, const QVec& b) {
    if (a.size() != 2 || b.size() != 2) throw std::invalid_argument("det2q: vectors must be 2-dimensional");
    return a[0] * b[1] - a[1] * b[0];
}

UnimodularMap::UnimodularMap(std::vector<Vec> rows_) : rows(std::move(rows_)) {
    const size_t n = rows.size();
    if (n < 1) throw std::invalid_argument("UnimodularMap: empty matrix");
    for (const Vec& r : rows)
        if (r.size() != n) throw std::invalid_argument("UnimodularMap: matrix not square");
    Int d = determinant();
    if (d != 1 && d != -1) throw std::invalid_argument("UnimodularMap: determinant must be +1 or -1");
}

namespace {

// Laplace expansion along the first row; matrices here are at most 4x4.
Int det_n(const std::vector<Vec>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Int d = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<Vec> minor;
        for (size_t i = 1; i < n; ++i) {
            Vec row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det_n(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

} // namespace

Int UnimodularMap::determinant() const { return det_n(rows); }

Vec apply_map(const UnimodularMap& U, const Vec& v) {
    if (static_cast<size_t>(U.dim()) != v.size())
        throw std::invalid_argument("apply_map: dimension mismatch");
    Vec out;
    out.reserve(v.size());
    for (const Vec& row : U.rows) out.push_back(dot(row, v));
    return out;
}

std::string CyclicQuotientType::label() const {
    if (smooth()) return "smooth";
    std::ostringstream os;
    if (is_canonical_A()) {
        os << "A_" << (m - 1);
    } else {
        os << "1/" << m << "(1," << q << ")";
    }
    return os.str();
}

CyclicQuotientType cone_normal_form(const Vec& v0, const Vec& v1) {
    if (v0.size() != 2 || v1.size() != 2)
        throw std::invalid_argument("cone_normal_form: rays must be 2-dimensional");
    if (!is_primitive(v0) || !is_primitive(v1))
        throw std::invalid_argument("cone_normal_form: rays must be primitive");
    Int d = det2(v0, v1);
    if (d == 0) throw std::invalid_argument("cone_normal_form: rays are parallel");
    Int m = boost::multiprecision::abs(d);
    if (m == 1) return CyclicQuotientType{1, 0};

    // Change basis so that v0 -> (0,1) and v1 -> (m,-k): then the dual cone's
    // semigroup ring is the Z_m quotient with weights (1,k). Row r1 is the
    // functional vanishing on v0 with r1(v1) = m; row r2 satisfies r2(v0) = 1.
    Int s = (d > 0) ? 1 : -1;
    Vec r1{-s * v0[1], s * v0[0]};
    Int a, b;
    Int g = ext_gcd(v0[0], v0[1], a, b);
    if (g != 1) throw std::logic_error("cone_normal_form: primitive ray with gcd != 1");
    Vec r2{a, b};
    Int k = mod_pos(-dot(r2, v1), m);
    if (gcd(k, m) != 1)
        throw std::logic_error("cone_normal_form: weight not coprime to order");
    Int kinv = mod_inverse(k, m);
    return CyclicQuotientType{m, (k < kinv) ? k : kinv};
}

} // namespace fano
