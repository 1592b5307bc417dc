#pragma once

// Shared test utilities: random Fano polygons, random unimodular maps, and
// set-style comparisons for vertex lists.

#include "fano/polytope.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace fano::testing {

inline std::optional<FanoPolytope> try_make(const std::vector<Vec>& pts) {
    try {
        return FanoPolytope::make_fano(pts);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

// Random valid 2D Fano polytope whose defining points lie in the coordinate
// box [-radius, radius]^2 (rejection sampling).
inline FanoPolytope random_fano_polygon(std::mt19937_64& rng, int radius = 6) {
    std::uniform_int_distribution<int> coord(-radius, radius);
    std::uniform_int_distribution<int> npts(3, 6);
    for (;;) {
        int n = npts(rng);
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(Vec{coord(rng), coord(rng)});
        if (auto P = try_make(pts)) return *P;
    }
}

inline UnimodularMap random_unimodular2(std::mt19937_64& rng, int radius = 10) {
    std::uniform_int_distribution<int> coord(-radius, radius);
    for (;;) {
        Int a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
        Int det = a * d - b * c;
        if (det == 1 || det == -1) return UnimodularMap({Vec{a, b}, Vec{c, d}});
    }
}

inline Vec random_primitive2(std::mt19937_64& rng, int radius = 10) {
    std::uniform_int_distribution<int> coord(-radius, radius);
    for (;;) {
        Vec v{coord(rng), coord(rng)};
        if ((v[0] != 0 || v[1] != 0) && is_primitive(v)) return v;
    }
}

inline std::vector<Vec> sorted_vertices(const FanoPolytope& P) {
    std::vector<Vec> v = P.vertices();
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<QVec> sorted_qvecs(std::vector<QVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace fano::testing
