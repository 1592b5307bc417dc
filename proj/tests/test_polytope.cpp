#include "doctest.h"
#include "helpers.hpp"

#include "fano/polytope.hpp"

#include <random>

using namespace fano;
using fano::testing::sorted_qvecs;
using fano::testing::sorted_vertices;

namespace {

QVec qvec2(const Rat& x, const Rat& y) { return QVec{x, y}; }

// Inverse-transpose action of a 2x2 unimodular map on rational covectors.
QVec inv_transpose_apply(const UnimodularMap& U, const QVec& w) {
    const Int& a = U.rows[0][0];
    const Int& b = U.rows[0][1];
    const Int& c = U.rows[1][0];
    const Int& d = U.rows[1][1];
    Rat e(U.determinant());
    return QVec{(Rat(d) * w[0] - Rat(c) * w[1]) / e, (-Rat(b) * w[0] + Rat(a) * w[1]) / e};
}

const std::vector<Vec> P2 = {Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}};
const std::vector<Vec> CROSS = {Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}};
const std::vector<Vec> HEXAGON = {Vec{1, 0},  Vec{0, 1},   Vec{-1, 0},
                                  Vec{0, -1}, Vec{1, 1},   Vec{-1, -1}};

} // namespace

TEST_CASE("make_fano canonicalizes hull vertices counterclockwise") {
    FanoPolytope P = FanoPolytope::make_fano(P2);
    CHECK(P.dim() == 2);
    CHECK(P.vertices() == std::vector<Vec>{Vec{-1, -1}, Vec{1, 0}, Vec{0, 1}});

    FanoPolytope C = FanoPolytope::make_fano(CROSS);
    CHECK(C.vertices() == std::vector<Vec>{Vec{-1, 0}, Vec{0, -1}, Vec{1, 0}, Vec{0, 1}});

    // Interior and edge-collinear points are redundant, not errors.
    FanoPolytope P_with_origin =
        FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}, Vec{0, 0}});
    CHECK(P_with_origin == P);
    FanoPolytope square = FanoPolytope::make_fano(
        {Vec{-1, 1}, Vec{1, 1}, Vec{1, -1}, Vec{-1, -1}, Vec{0, 1}});
    CHECK(square.vertices().size() == 4);
}

TEST_CASE("make_fano validation errors") {
    // (1,0) falls inside the hull of the rest; the hull vertex (2,0) is not primitive.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0}, Vec{2, 0}, Vec{0, 1}, Vec{-1, -1}}),
                    std::invalid_argument);
    // Origin on the boundary or outside.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{0, 1}, Vec{1, 0}, Vec{-1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{1, 1}}),
                    std::invalid_argument);
    // Too few distinct points / degenerate hull.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0}, Vec{1, 0}, Vec{0, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0}, Vec{-1, 0}, Vec{2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FanoPolytope::make_fano({}), std::invalid_argument);
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("make_fano in 3D accepts simplices with interior origin") {
    FanoPolytope P = xd_threefold(1);
    CHECK(P.dim() == 3);
    CHECK(P.vertices().size() == 4);

    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1},
                                             Vec{-1, -1, -1}, Vec{1, 1, 1}}),
                    std::invalid_argument);
    // Coplanar.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{-1, 0, 0},
                                             Vec{0, -1, 0}}),
                    std::invalid_argument);
    // Origin on a facet boundary.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1},
                                             Vec{0, 0, -1}}),
                    std::invalid_argument);
    // Non-primitive vertex.
    CHECK_THROWS_AS(FanoPolytope::make_fano({Vec{2, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1},
                                             Vec{-1, -1, -1}}),
                    std::invalid_argument);
}

TEST_CASE("dual polytopes of the classical examples") {
    DualPolytope Q = dual(FanoPolytope::make_fano(P2));
    CHECK(sorted_qvecs(Q.vertices)
          == sorted_qvecs({qvec2(-1, -1), qvec2(2, -1), qvec2(-1, 2)}));

    DualPolytope S = dual(FanoPolytope::make_fano(CROSS));
    CHECK(sorted_qvecs(S.vertices)
          == sorted_qvecs({qvec2(1, 1), qvec2(1, -1), qvec2(-1, 1), qvec2(-1, -1)}));

    DualPolytope T = dual(rank1_triangle(9, 2));
    CHECK(sorted_qvecs(T.vertices)
          == sorted_qvecs({qvec2(0, -1), qvec2(Rat(-1, 3), 2), qvec2(Rat(1, 3), -1)}));
}

TEST_CASE("dual vertices satisfy the defining inequalities with enough equalities") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 300; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        DualPolytope Q = dual(P);
        CHECK(Q.vertices.size() == P.vertices().size());
        for (const QVec& w : Q.vertices) {
            int tight = 0;
            for (const Vec& v : P.vertices()) {
                Rat pairing = dot(w, v);
                CHECK(pairing >= -1);
                if (pairing == -1) ++tight;
            }
            CHECK(tight >= 2);
        }
    }
}

TEST_CASE("volume of dual polytopes") {
    CHECK(volume(dual(FanoPolytope::make_fano(CROSS))) == 4);
    CHECK(volume(dual(FanoPolytope::make_fano(P2))) == Rat(9, 2));
    for (int n = 1; n <= 8; ++n) CHECK(volume(dual(y_family(n))) == Rat(2, n));
}

TEST_CASE("degree of the named families") {
    CHECK(degree(FanoPolytope::make_fano(P2)) == 9);
    CHECK(degree(FanoPolytope::make_fano(CROSS)) == 8);
    CHECK(degree(FanoPolytope::make_fano(HEXAGON)) == 6);
    for (int n = 1; n <= 8; ++n) {
        CHECK(degree(weighted_p11n(n)) == Rat((n + 2) * (n + 2), n));
        CHECK(degree(y_family(n)) == Rat(4, n));
    }
    CHECK(degree(rank1_triangle(1, 0)) == 9);
    CHECK(degree(rank1_triangle(3, 2)) == 3);
    CHECK(degree(rank1_triangle(9, 2)) == 1);
    CHECK(degree(rank1_triangle(5, 2)) == Rat(9, 5));
}

TEST_CASE("edge formula for the degree agrees with the dual volume") {
    CHECK(degree_edge_formula(FanoPolytope::make_fano(P2)) == 9);
    for (int n = 1; n <= 8; ++n) CHECK(degree_edge_formula(y_family(n)) == Rat(4, n));
    for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 0}, {3, 2}, {9, 2}, {9, 5}, {9, 8}, {5, 2}})
        CHECK(degree_edge_formula(rank1_triangle(k, l)) == Rat(9, k));

    std::mt19937_64 rng(47);
    for (int it = 0; it < 500; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        CHECK(degree(P) == degree_edge_formula(P));
        CHECK(degree(P) > 0);
    }

    CHECK_THROWS_AS(degree_edge_formula(xd_threefold(1)), std::invalid_argument);
}

TEST_CASE("barycenter of dual polytopes") {
    CHECK(barycenter(dual(FanoPolytope::make_fano(P2))) == qvec2(0, 0));
    CHECK(barycenter(dual(FanoPolytope::make_fano(HEXAGON))) == qvec2(0, 0));
    for (int n = 1; n <= 10; ++n)
        CHECK(barycenter(dual(y_family(n))) == qvec2(0, 0));
    for (int n = 2; n <= 6; ++n)
        CHECK(barycenter(dual(weighted_p11n(n))) != qvec2(0, 0));
}

TEST_CASE("barycenter transforms by the inverse transpose") {
    std::mt19937_64 rng(53);
    for (int it = 0; it < 200; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        UnimodularMap U = fano::testing::random_unimodular2(rng);
        std::vector<Vec> mapped;
        for (const Vec& v : P.vertices()) mapped.push_back(apply_map(U, v));
        FanoPolytope P2m = FanoPolytope::make_fano(mapped);
        QVec b = barycenter(dual(P));
        QVec b2 = barycenter(dual(P2m));
        CHECK(b2 == inv_transpose_apply(U, b));
        CHECK((b == qvec2(0, 0)) == (b2 == qvec2(0, 0)));
    }
}

TEST_CASE("ehrhart counts") {
    DualPolytope Q = dual(FanoPolytope::make_fano(P2));
    CHECK(ehrhart_count(Q, 0) == 1);
    CHECK(ehrhart_count(Q, 1) == 10);
    CHECK(ehrhart_count(Q, 2) == 28);
    CHECK(ehrhart_count(dual(rank1_triangle(9, 2)), 3) == 7);
    CHECK(ehrhart_count(dual(xd_threefold(1)), 1) == 35);
    CHECK_THROWS_AS(ehrhart_count(Q, -1), std::invalid_argument);

    std::mt19937_64 rng(59);
    for (int it = 0; it < 30; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        DualPolytope R = dual(P);
        int l = static_cast<int>(gorenstein_index(P));
        // Counts never drop, and grow strictly over one Gorenstein period
        // (adding an integral vertex of l*R strictly deepens one facet value).
        int kmax = (l <= 6) ? std::max(8, 2 * l) : 8;
        std::vector<Int> counts;
        for (int k = 0; k <= kmax; ++k) counts.push_back(ehrhart_count(R, k));
        for (int k = 1; k <= kmax; ++k) CHECK(counts[k] >= counts[k - 1]);
        if (l <= 6) {
            CHECK(counts[l] > counts[0]);
            CHECK(counts[2 * l] > counts[l]);
        }
    }

    // On reflexive polytopes the count is strictly increasing step by step.
    for (const auto& verts : {P2, CROSS, HEXAGON}) {
        DualPolytope R = dual(FanoPolytope::make_fano(verts));
        for (Int k = 1; k <= 6; ++k) CHECK(ehrhart_count(R, k) > ehrhart_count(R, k - 1));
    }
}

TEST_CASE("ehrhart counts on reflexive polytopes match the quadratic formula") {
    for (const auto& verts : {P2, CROSS, HEXAGON}) {
        FanoPolytope P = FanoPolytope::make_fano(verts);
        REQUIRE(gorenstein_index(P) == 1);
        Rat deg = degree(P);
        DualPolytope Q = dual(P);
        for (Int k = 0; k <= 5; ++k) {
            Rat expected = Rat(k * (k + 1), 2) * deg + 1;
            CHECK(Rat(ehrhart_count(Q, k)) == expected);
        }
    }
}

TEST_CASE("gorenstein index and reflexivity") {
    CHECK(gorenstein_index(FanoPolytope::make_fano(P2)) == 1);
    CHECK(gorenstein_index(y_family(2)) == 2);
    CHECK(gorenstein_index(rank1_triangle(9, 2)) == 3);
    CHECK(gorenstein_index(weighted_p11n(2)) == 1);
    CHECK(gorenstein_index(weighted_p11n(3)) == 3);
    CHECK(gorenstein_index(weighted_p11n(4)) == 2);

    // Reflexive polytopes satisfy dual(dual(P)) = P.
    for (const auto& verts : {P2, CROSS, HEXAGON}) {
        FanoPolytope P = FanoPolytope::make_fano(verts);
        DualPolytope Q = dual(P);
        std::vector<Vec> qverts;
        for (const QVec& w : Q.vertices) {
            Vec z;
            for (const Rat& c : w) {
                REQUIRE(den(c) == 1);
                z.push_back(num(c));
            }
            qverts.push_back(z);
        }
        FanoPolytope Pdd = FanoPolytope::make_fano(qverts);
        DualPolytope Qd = dual(Pdd);
        std::vector<QVec> original;
        for (const Vec& v : P.vertices()) original.push_back(QVec{Rat(v[0]), Rat(v[1])});
        CHECK(sorted_qvecs(Qd.vertices) == sorted_qvecs(original));
    }
}

TEST_CASE("picard rank") {
    CHECK(picard_rank(FanoPolytope::make_fano(P2)) == 1);
    CHECK(picard_rank(FanoPolytope::make_fano(CROSS)) == 2);
    CHECK(picard_rank(FanoPolytope::make_fano(HEXAGON)) == 4);
    CHECK(picard_rank(y_family(2)) == 2);
    CHECK(picard_rank(xd_threefold(2)) == 1);
}

TEST_CASE("summary invariants under unimodular maps") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 150; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        UnimodularMap U = fano::testing::random_unimodular2(rng);
        std::vector<Vec> mapped;
        for (const Vec& v : P.vertices()) mapped.push_back(apply_map(U, v));
        FanoPolytope P2m = FanoPolytope::make_fano(mapped);
        CHECK(degree(P) == degree(P2m));
        CHECK(gorenstein_index(P) == gorenstein_index(P2m));
        CHECK(picard_rank(P) == picard_rank(P2m));
        CHECK(ehrhart_count(dual(P), 2) == ehrhart_count(dual(P2m), 2));
    }
}

TEST_CASE("normal form is a well-defined orbit invariant") {
    std::mt19937_64 rng(67);
    for (int it = 0; it < 200; ++it) {
        FanoPolytope P = fano::testing::random_fano_polygon(rng);
        UnimodularMap U = fano::testing::random_unimodular2(rng);
        std::vector<Vec> mapped;
        for (const Vec& v : P.vertices()) mapped.push_back(apply_map(U, v));
        FanoPolytope N1 = normal_form(P);
        FanoPolytope N2 = normal_form(FanoPolytope::make_fano(mapped));
        CHECK(N1 == N2);
        CHECK(normal_form(N1) == N1);
    }

    FanoPolytope nf2 = normal_form(rank1_triangle(9, 2));
    CHECK(normal_form(rank1_triangle(9, 5)) == nf2);
    CHECK(normal_form(rank1_triangle(9, 8)) == nf2);

    FanoPolytope p2 = FanoPolytope::make_fano(P2);
    for (int l : {0, 2, 3}) {
        UnimodularMap U({Vec{1, 0}, Vec{1 - l, 1}});
        std::vector<Vec> mapped;
        for (const Vec& v : p2.vertices()) mapped.push_back(apply_map(U, v));
        CHECK(normal_form(FanoPolytope::make_fano(mapped)) == normal_form(p2));
    }
}

TEST_CASE("summaries aggregate the invariants") {
    PolytopeSummary s = summarize(y_family(2));
    CHECK(s.degree == 2);
    CHECK(s.picard_rank == 2);
    CHECK(s.gorenstein_index == 2);
    CHECK_FALSE(s.reflexive);
    CHECK(s.barycenter == qvec2(0, 0));

    PolytopeSummary h = summarize(FanoPolytope::make_fano(HEXAGON));
    CHECK(h.degree == 6);
    CHECK(h.picard_rank == 4);
    CHECK(h.reflexive);
}

TEST_CASE("the X_d threefold family") {
    for (int d = 1; d <= 6; ++d) {
        FanoPolytope P = xd_threefold(d);
        CHECK(degree(P) == Rat((d + 3) * (d + 3) * (d + 3), d));
        DualPolytope Q = dual(P);
        std::vector<QVec> expected = {
            QVec{Rat(-1), Rat(-1), Rat(-1)},
            QVec{Rat(-1), Rat(-1), Rat(3, d)},
            QVec{Rat(-1), Rat(d + 2), Rat(-1)},
            QVec{Rat(d + 2), Rat(-1), Rat(-1)},
        };
        CHECK(sorted_qvecs(Q.vertices) == sorted_qvecs(expected));
    }
    CHECK(degree(xd_threefold(1)) == 64);
}
