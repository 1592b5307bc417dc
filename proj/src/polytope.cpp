#include "fano/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace fano {

namespace {

Int det3(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1])
         - a[1] * (b[0] * c[2] - b[2] * c[0])
         + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Rat det3q(const QVec& a, const QVec& b, const QVec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1])
         - a[1] * (b[0] * c[2] - b[2] * c[0])
         + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec subq(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

// Strictly convex hull of 2D points, counterclockwise (monotone chain).
std::vector<Vec> hull2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) throw std::invalid_argument("make_fano: fewer than 3 distinct points");
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return det2(sub(a, o), sub(b, o));
    };
    std::vector<Vec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower hull
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper hull
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

void rotate_to_lex_min(std::vector<Vec>& v) {
    auto mn = std::min_element(v.begin(), v.end());
    std::rotate(v.begin(), mn, v.end());
}

} // namespace

FanoPolytope FanoPolytope::make_fano(const std::vector<Vec>& raw_vertices) {
    if (raw_vertices.empty()) throw std::invalid_argument("make_fano: no vertices");
    const size_t d = raw_vertices[0].size();
    for (const Vec& v : raw_vertices)
        if (v.size() != d) throw std::invalid_argument("make_fano: mixed dimensions");

    if (d == 2) {
        std::vector<Vec> hull = hull2d(raw_vertices);
        for (const Vec& v : hull)
            if (!is_primitive(v))
                throw std::invalid_argument("make_fano: non-primitive hull vertex");
        const size_t n = hull.size();
        for (size_t i = 0; i < n; ++i)
            if (det2(hull[i], hull[(i + 1) % n]) <= 0)
                throw std::invalid_argument("make_fano: origin not strictly interior");
        rotate_to_lex_min(hull);
        return FanoPolytope(2, std::move(hull));
    }

    if (d == 3) {
        std::vector<Vec> pts = raw_vertices;
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() != 4)
            throw std::invalid_argument("make_fano: 3D support covers simplices (exactly 4 distinct vertices)");
        for (const Vec& v : pts)
            if (!is_primitive(v))
                throw std::invalid_argument("make_fano: non-primitive vertex");
        if (det3(sub(pts[1], pts[0]), sub(pts[2], pts[0]), sub(pts[3], pts[0])) == 0)
            throw std::invalid_argument("make_fano: degenerate (coplanar) simplex");
        // Origin strictly interior: for each facet, the origin lies strictly on
        // the same side as the omitted vertex.
        for (int omit = 0; omit < 4; ++omit) {
            std::vector<Vec> f;
            for (int i = 0; i < 4; ++i)
                if (i != omit) f.push_back(pts[i]);
            Int side_opp = det3(sub(f[1], f[0]), sub(f[2], f[0]), sub(pts[omit], f[0]));
            Int side_origin = det3(sub(f[1], f[0]), sub(f[2], f[0]), sub(Vec{0, 0, 0}, f[0]));
            if (side_opp == 0 || side_origin == 0 || (side_opp > 0) != (side_origin > 0))
                throw std::invalid_argument("make_fano: origin not strictly interior");
        }
        return FanoPolytope(3, std::move(pts));
    }

    throw std::invalid_argument("make_fano: only dimensions 2 and 3 are supported");
}

DualPolytope dual(const FanoPolytope& P) {
    const auto& V = P.vertices();
    DualPolytope Q;
    Q.dim = P.dim();
    Q.facet_normals = V;
    if (P.dim() == 2) {
        const size_t n = V.size();
        for (size_t i = 0; i < n; ++i) {
            const Vec& u = V[i];
            const Vec& v = V[(i + 1) % n];
            Rat D(det2(u, v));
            Q.vertices.push_back(QVec{Rat(u[1] - v[1]) / D, Rat(v[0] - u[0]) / D});
        }
        return Q;
    }
    // 3D simplex: one dual vertex per facet, solving <y, v> = -1 on the three
    // facet vertices by Cramer's rule.
    for (int omit = 0; omit < 4; ++omit) {
        std::vector<Vec> f;
        for (int i = 0; i < 4; ++i)
            if (i != omit) f.push_back(V[i]);
        Int D = det3(f[0], f[1], f[2]);
        if (D == 0) throw std::logic_error("dual: singular facet system");
        Vec rhs{-1, -1, -1};
        QVec w(3);
        for (int col = 0; col < 3; ++col) {
            std::vector<Vec> M = {f[0], f[1], f[2]};
            for (int r = 0; r < 3; ++r) M[r][col] = rhs[r];
            w[col] = make_rat(det3(M[0], M[1], M[2]), D);
        }
        Q.vertices.push_back(std::move(w));
    }
    return Q;
}

Rat volume(const DualPolytope& Q) {
    if (Q.dim == 2) {
        Rat two_area = 0;
        const size_t n = Q.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            Rat d = det2q(Q.vertices[i], Q.vertices[(i + 1) % n]);
            if (d <= 0) throw std::logic_error("volume: dual polygon not counterclockwise around origin");
            two_area += d;
        }
        return two_area / 2;
    }
    if (Q.vertices.size() != 4)
        throw std::invalid_argument("volume: 3D support covers simplices only");
    Rat d = det3q(subq(Q.vertices[1], Q.vertices[0]),
                  subq(Q.vertices[2], Q.vertices[0]),
                  subq(Q.vertices[3], Q.vertices[0]));
    return boost::multiprecision::abs(d) / 6;
}

Rat degree(const FanoPolytope& P) {
    return Rat(factorial(P.dim())) * volume(dual(P));
}

Rat degree_edge_formula(const FanoPolytope& P) {
    if (P.dim() != 2) throw std::invalid_argument("degree_edge_formula: 2D only");
    const auto& V = P.vertices();
    const size_t n = V.size();
    Rat deg = 0;
    for (size_t i = 0; i < n; ++i) {
        const Vec& prev = V[(i + n - 1) % n];
        const Vec& cur = V[i];
        const Vec& next = V[(i + 1) % n];
        Int d_prev = det2(prev, cur); // counterclockwise order: positive
        Int d_next = det2(cur, next);
        Int d_skip = det2(prev, next); // signed; negative at every vertex of a triangle
        deg += Rat(2) / Rat(d_prev);
        deg -= Rat(d_skip) / (Rat(d_prev) * Rat(d_next));
    }
    return deg;
}

QVec barycenter(const DualPolytope& Q) {
    if (Q.dim == 2) {
        const size_t n = Q.vertices.size();
        Rat total = 0;
        QVec acc{Rat(0), Rat(0)};
        for (size_t i = 0; i < n; ++i) {
            const QVec& a = Q.vertices[i];
            const QVec& b = Q.vertices[(i + 1) % n];
            Rat w = det2q(a, b); // twice the triangle area; positive for CCW
            total += w;
            acc[0] += w * (a[0] + b[0]) / 3;
            acc[1] += w * (a[1] + b[1]) / 3;
        }
        return QVec{acc[0] / total, acc[1] / total};
    }
    if (Q.vertices.size() != 4)
        throw std::invalid_argument("barycenter: 3D support covers simplices only");
    QVec c(3, Rat(0));
    for (const QVec& w : Q.vertices)
        for (int i = 0; i < 3; ++i) c[i] += w[i];
    for (int i = 0; i < 3; ++i) c[i] /= 4;
    return c;
}

Int ehrhart_count(const DualPolytope& Q, const Int& k) {
    if (k < 0) throw std::invalid_argument("ehrhart_count: k must be nonnegative");
    if (k == 0) return 1;
    const int d = Q.dim;
    std::vector<Int> lo(d), hi(d);
    for (int c = 0; c < d; ++c) {
        Rat mn = Q.vertices[0][c], mx = Q.vertices[0][c];
        for (const QVec& w : Q.vertices) {
            if (w[c] < mn) mn = w[c];
            if (w[c] > mx) mx = w[c];
        }
        lo[c] = ceil_rat(Rat(k) * mn);
        hi[c] = floor_rat(Rat(k) * mx);
    }
    // y is in k*Q iff <y, v> >= -k for every primal vertex v (the facet data).
    auto inside = [&](const Vec& y) {
        for (const Vec& v : Q.facet_normals)
            if (dot(y, v) < -k) return false;
        return true;
    };
    Int count = 0;
    if (d == 2) {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                if (inside(Vec{x, y})) ++count;
    } else {
        for (Int x = lo[0]; x <= hi[0]; ++x)
            for (Int y = lo[1]; y <= hi[1]; ++y)
                for (Int z = lo[2]; z <= hi[2]; ++z)
                    if (inside(Vec{x, y, z})) ++count;
    }
    return count;
}

Int gorenstein_index(const FanoPolytope& P) {
    DualPolytope Q = dual(P);
    Int l = 1;
    for (const QVec& w : Q.vertices)
        for (const Rat& c : w) l = lcm(l, den(c));
    return l;
}

int picard_rank(const FanoPolytope& P) {
    if (P.dim() == 3 && P.vertices().size() != 4)
        throw std::invalid_argument("picard_rank: non-simplicial 3D polytope");
    return static_cast<int>(P.vertices().size()) - P.dim();
}

namespace {

// Lexicographically smallest rotated vertex list over all SL(2,Z) maps that
// send a minimal-determinant counterclockwise edge (u,v) to u = (1,0),
// v = (r, D) with 0 <= r < D.
std::vector<Vec> sl_canonical_candidate(const FanoPolytope& P) {
    const auto& V = P.vertices();
    const size_t n = V.size();
    std::vector<Int> dets(n);
    Int dmin;
    for (size_t i = 0; i < n; ++i) {
        dets[i] = det2(V[i], V[(i + 1) % n]);
        if (i == 0 || dets[i] < dmin) dmin = dets[i];
    }
    std::optional<std::vector<Vec>> best;
    for (size_t i = 0; i < n; ++i) {
        if (dets[i] != dmin) continue;
        const Vec& u = V[i];
        const Vec& v = V[(i + 1) % n];
        Int a, b;
        ext_gcd(u[0], u[1], a, b); // a*ux + b*uy = 1 (u primitive)
        // Rows (a,b) and (-uy,ux) send u to (1,0) and have determinant +1.
        Int x = a * v[0] + b * v[1];
        const Int& D = dets[i];
        Int c = -floor_rat(Rat(x, D)); // shear so the second vertex lands at (x mod D, D)
        UnimodularMap U({Vec{a + c * (-u[1]), b + c * u[0]}, Vec{-u[1], u[0]}});
        std::vector<Vec> cand(n);
        for (size_t j = 0; j < n; ++j) cand[j] = apply_map(U, V[(i + j) % n]);
        if (!best || cand < *best) best = std::move(cand);
    }
    return *best;
}

} // namespace

FanoPolytope normal_form(const FanoPolytope& P) {
    if (P.dim() != 2) throw std::invalid_argument("normal_form: 2D only");
    std::vector<Vec> c1 = sl_canonical_candidate(P);
    std::vector<Vec> reflected;
    for (const Vec& v : P.vertices()) reflected.push_back(Vec{v[1], v[0]});
    std::vector<Vec> c2 = sl_canonical_candidate(FanoPolytope::make_fano(reflected));
    return FanoPolytope::make_fano(c1 < c2 ? c1 : c2);
}

PolytopeSummary summarize(const FanoPolytope& P) {
    DualPolytope Q = dual(P);
    PolytopeSummary s;
    s.degree = Rat(factorial(P.dim())) * volume(Q);
    s.picard_rank = picard_rank(P);
    s.gorenstein_index = gorenstein_index(P);
    s.reflexive = (s.gorenstein_index == 1);
    s.barycenter = barycenter(Q);
    return s;
}

FanoPolytope weighted_p11n(const Int& n) {
    if (n < 1) throw std::invalid_argument("weighted_p11n: n >= 1 required");
    return FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, -n}});
}

FanoPolytope y_family(const Int& n) {
    if (n < 1) throw std::invalid_argument("y_family: n >= 1 required");
    return FanoPolytope::make_fano({Vec{-n, 1}, Vec{n, 1}, Vec{n, -1}, Vec{-n, -1}});
}

FanoPolytope rank1_triangle(const Int& k, const Int& l) {
    if (k < 1) throw std::invalid_argument("rank1_triangle: k >= 1 required");
    return FanoPolytope::make_fano({Vec{0, 1}, Vec{-k, -l}, Vec{k, l - 1}});
}

FanoPolytope xd_threefold(const Int& d) {
    if (d < 1) throw std::invalid_argument("xd_threefold: d >= 1 required");
    return FanoPolytope::make_fano(
        {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}, Vec{-1, -1, -d}});
}

} // namespace fano
