#include "fano/classify.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace fano {
namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Box enumeration. Candidate vertices are the primitive points of
// [-box, box]^2; every Fano polygon is generated exactly once as the vertex
// sequence that starts at its angularly smallest vertex and proceeds
// counterclockwise. Coordinates stay far below 2^31, so plain 64-bit
// arithmetic is exact throughout.

struct P64 {
    std::int64_t x = 0;
    std::int64_t y = 0;
};

std::int64_t cross64(const P64& a, const P64& b) { return a.x * b.y - a.y * b.x; }

// 0 on the half-plane swept counterclockwise from the positive x-axis
// (inclusive) to the negative x-axis (exclusive), 1 on the other half.
int half_plane(const P64& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; }

// Strict angular order on primitive points; distinct primitive points are
// never parallel within one half-plane, so the cross product decides.
bool angle_less(const P64& a, const P64& b) {
    if (half_plane(a) != half_plane(b)) return half_plane(a) < half_plane(b);
    return cross64(a, b) > 0;
}

// Lattice height over the origin of the line through consecutive
// counterclockwise vertices u, v: the local index of the edge. The
// Gorenstein index of the polygon is the lcm of its edge heights.
std::int64_t edge_height(const P64& u, const P64& v) {
    std::int64_t c = std::gcd(std::llabs(v.x - u.x), std::llabs(v.y - u.y));
    return cross64(u, v) / c;
}

constexpr std::size_t kMaxVertices = 9;

struct Enumerator {
    std::int64_t max_index;
    std::vector<P64> points; // primitive points of the box, by angle
    std::vector<P64> seq;
    std::vector<std::vector<Vec>> found;

    Enumerator(int max_index_, int box) : max_index(max_index_) {
        for (std::int64_t x = -box; x <= box; ++x)
            for (std::int64_t y = -box; y <= box; ++y)
                if (std::gcd(std::llabs(x), std::llabs(y)) == 1) points.push_back({x, y});
        std::sort(points.begin(), points.end(), angle_less);
    }

    static bool left_turn(const P64& a, const P64& b, const P64& c) {
        return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x) > 0;
    }

    void run() {
        for (std::size_t s = 0; s + 2 < points.size(); ++s) {
            seq.assign(1, points[s]);
            extend(s, 1);
        }
    }

    void record() {
        std::vector<Vec> verts;
        verts.reserve(seq.size());
        for (const P64& p : seq) verts.push_back(Vec{Int(p.x), Int(p.y)});
        found.push_back(std::move(verts));
    }

    // Invariants along the partial sequence: angles strictly increase (so the
    // first vertex is the angular minimum and no wrap occurs), consecutive
    // cross products are positive (origin strictly inside every edge line),
    // interior turns are strict left turns, and the lcm of the edge heights
    // so far is index_lcm <= max_index. Closing checks the two remaining
    // turns and the height of the closing edge.
    void extend(std::size_t last_idx, std::int64_t index_lcm) {
        const P64 v = seq.back(); // by value: push_back below may reallocate
        const P64 prev = seq.size() >= 2 ? seq[seq.size() - 2] : P64{};
        if (seq.size() >= 3) {
            const P64 w = seq.front();
            if (cross64(v, w) > 0 && left_turn(prev, v, w) && left_turn(v, w, seq[1]) &&
                std::lcm(index_lcm, edge_height(v, w)) <= max_index)
                record();
        }
        if (seq.size() == kMaxVertices) return;
        for (std::size_t i = last_idx + 1; i < points.size(); ++i) {
            const P64& p = points[i];
            if (cross64(v, p) <= 0) continue;
            if (seq.size() >= 2 && !left_turn(prev, v, p)) continue;
            std::int64_t l = std::lcm(index_lcm, edge_height(v, p));
            if (l > max_index) continue;
            seq.push_back(p);
            extend(i, l);
            seq.pop_back();
        }
    }
};

// Degree descending, then Picard rank, vertex count, and vertex list.
bool surface_order(const ClassifiedSurface& a, const ClassifiedSurface& b) {
    if (a.summary.degree != b.summary.degree) return a.summary.degree > b.summary.degree;
    if (a.summary.picard_rank != b.summary.picard_rank)
        return a.summary.picard_rank < b.summary.picard_rank;
    if (a.polytope.vertices().size() != b.polytope.vertices().size())
        return a.polytope.vertices().size() < b.polytope.vertices().size();
    return a.polytope.vertices() < b.polytope.vertices();
}

bool is_zero_vector(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::invalid_argument("coordinate exceeds 64-bit range");
    return v.convert_to<long long>();
}

json surface_json(const ClassifiedSurface& s) {
    json verts = json::array();
    for (const Vec& v : s.polytope.vertices()) {
        json jv = json::array();
        for (const Int& c : v) jv.push_back(to_int64(c));
        verts.push_back(jv);
    }
    json entries = json::array();
    for (const SingularityEntry& e : s.singularities.entries) {
        json je{{"edge", e.edge_index},
                {"label", e.type.label()},
                {"m", e.type.m.str()},
                {"q", e.type.q.str()},
                {"multiplicity", e.multiplicity.str()}};
        if (e.discrepancy) je["discrepancy"] = rat_str(*e.discrepancy);
        if (e.qg_def_dim) je["qg_def_dim"] = e.qg_def_dim->str();
        if (e.t_witness)
            je["t_witness"] = {{"d", e.t_witness->d.str()},
                               {"n", e.t_witness->n.str()},
                               {"a", e.t_witness->a.str()},
                               {"canonical", e.t_witness->canonical_flag}};
        entries.push_back(je);
    }
    json bary = json::array();
    for (const Rat& c : s.summary.barycenter) bary.push_back(rat_str(c));
    json j;
    j["vertices"] = verts;
    j["summary"] = {{"degree", rat_str(s.summary.degree)},
                    {"picard_rank", s.summary.picard_rank},
                    {"gorenstein_index", s.summary.gorenstein_index.str()},
                    {"reflexive", s.summary.reflexive},
                    {"barycenter", bary}};
    j["singularities"] = {{"entries", entries}, {"gamma_max", s.singularities.gamma_max.str()}};
    if (s.singularities.min_discrepancy)
        j["singularities"]["min_discrepancy"] = rat_str(*s.singularities.min_discrepancy);
    j["verdicts"] = {{"ke_toric", s.ke.ke_toric},
                     {"soliton_only", s.ke.soliton_only},
                     {"smoothable", s.smoothable}};
    return j;
}

} // namespace

int coordinate_box_floor(int max_index) {
    if (max_index < 1)
        throw std::invalid_argument("coordinate_box_floor: max_index >= 1 required");
    switch (max_index) {
        case 1: return 3;
        case 2: return 6;
        case 3: return 10;
        default: return 4 * max_index;
    }
}

ClassifiedSurface classify_surface(const FanoPolytope& P) {
    FanoPolytope nf = normal_form(P);
    ClassifiedSurface s{nf, summarize(nf), classify_edges(nf), ke_toric_test(nf), false};
    s.smoothable = s.singularities.all_t_or_smooth();
    return s;
}

std::vector<FanoPolytope> enumerate_ldp_polytopes(int max_index, int box) {
    if (max_index < 1)
        throw std::invalid_argument("enumerate_ldp_polytopes: max_index >= 1 required");
    if (box < 1) throw std::invalid_argument("enumerate_ldp_polytopes: box >= 1 required");
    Enumerator e(max_index, box);
    e.run();
    std::map<std::vector<Vec>, FanoPolytope> classes;
    for (const std::vector<Vec>& verts : e.found) {
        FanoPolytope nf = normal_form(FanoPolytope::make_fano(verts));
        classes.try_emplace(nf.vertices(), nf);
    }
    std::vector<FanoPolytope> out;
    out.reserve(classes.size());
    for (const auto& [key, P] : classes) out.push_back(P);
    return out;
}

std::vector<ClassifiedSurface> enumerate_ldp(const EnumerationConfig& config) {
    int floor = coordinate_box_floor(config.max_index);
    if (config.coordinate_box < floor)
        throw std::invalid_argument("enumerate_ldp: coordinate_box must be at least " +
                                    std::to_string(floor) + " for max_index " +
                                    std::to_string(config.max_index));
    std::vector<FanoPolytope> polys =
        enumerate_ldp_polytopes(config.max_index, config.coordinate_box);
    if (config.stabilization_check) {
        std::vector<FanoPolytope> bigger =
            enumerate_ldp_polytopes(config.max_index, config.coordinate_box + 1);
        if (bigger.size() != polys.size())
            std::cerr << "warning: box " << config.coordinate_box
                      << " is incomplete for index <= " << config.max_index << ": box "
                      << config.coordinate_box + 1 << " finds "
                      << bigger.size() - polys.size() << " additional class(es)\n";
    }
    std::vector<ClassifiedSurface> out;
    out.reserve(polys.size());
    for (const FanoPolytope& P : polys) out.push_back(classify_surface(P));
    std::sort(out.begin(), out.end(), surface_order);
    return out;
}

std::vector<ClassifiedSurface> filter_barycenter_zero(const std::vector<ClassifiedSurface>& in) {
    std::vector<ClassifiedSurface> out;
    for (const ClassifiedSurface& s : in)
        if (is_zero_vector(s.summary.barycenter)) out.push_back(s);
    return out;
}

std::vector<ClassifiedSurface> filter_all_t(const std::vector<ClassifiedSurface>& in) {
    std::vector<ClassifiedSurface> out;
    for (const ClassifiedSurface& s : in)
        if (s.smoothable) out.push_back(s);
    return out;
}

std::vector<ClassifiedSurface> classify_rank1() {
    std::map<std::vector<Vec>, ClassifiedSurface> classes;
    for (int k : {1, 3, 9}) {
        for (int l = 0; l < k; ++l) {
            try {
                ClassifiedSurface s = classify_surface(rank1_triangle(k, l));
                classes.try_emplace(s.polytope.vertices(), std::move(s));
            } catch (const std::invalid_argument&) {
                // non-primitive vertex: no Fano triangle for this (k, l)
            }
        }
    }
    std::vector<ClassifiedSurface> out;
    out.reserve(classes.size());
    for (auto& [key, s] : classes) out.push_back(std::move(s));
    std::sort(out.begin(), out.end(), surface_order);
    return out;
}

std::vector<TableRow> verify_classification_table() {
    struct Expected {
        std::string name;
        FanoPolytope P;
        Rat degree;
        int rho;
    };
    const std::vector<Expected> table = {
        {"P^2", FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, -1}}), Rat(9), 1},
        {"P^1 x P^1",
         FanoPolytope::make_fano({Vec{1, 0}, Vec{0, 1}, Vec{-1, 0}, Vec{0, -1}}), Rat(8), 2},
        {"Bl_3 P^2",
         FanoPolytope::make_fano(
             {Vec{1, 0}, Vec{1, 1}, Vec{0, 1}, Vec{-1, 0}, Vec{-1, -1}, Vec{0, -1}}),
         Rat(6), 4},
        {"Y_1", y_family(1), Rat(4), 2},
        {"rank-1 triangle k=3", rank1_triangle(3, 2), Rat(3), 1},
        {"Y_2", y_family(2), Rat(2), 2},
        {"rank-1 triangle k=9", rank1_triangle(9, 2), Rat(1), 1},
    };
    std::vector<TableRow> rows;
    rows.reserve(table.size());
    for (const Expected& e : table) {
        ClassifiedSurface s = classify_surface(e.P);
        auto check = [&](bool ok, const std::string& property) {
            if (!ok)
                throw std::logic_error("verify_classification_table: " + e.name + ": " +
                                       property);
        };
        check(s.summary.degree == e.degree, "degree");
        check(s.summary.picard_rank == e.rho, "picard rank");
        check(is_zero_vector(s.summary.barycenter), "vanishing barycenter");
        check(s.smoothable, "smoothable singularities");
        rows.push_back({e.name, std::move(s)});
    }
    return rows;
}

std::vector<YFamilyRow> verify_y_family(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_y_family: n_max >= 1 required");
    std::vector<YFamilyRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        ClassifiedSurface s = classify_surface(y_family(n));
        auto check = [&](bool ok, const std::string& property) {
            if (!ok)
                throw std::logic_error("verify_y_family: Y_" + std::to_string(n) + ": " +
                                       property);
        };
        check(s.summary.degree == Rat(4, n), "degree");
        std::multiset<std::string> labels;
        for (const SingularityEntry& e : s.singularities.entries)
            labels.insert(e.type.label());
        const std::string side = CyclicQuotientType{Int(2 * n), Int(1)}.label();
        const std::string top = CyclicQuotientType{Int(2 * n), Int(2 * n - 1)}.label();
        check(labels == std::multiset<std::string>{side, side, top, top},
              "singularity types");
        check(s.singularities.min_discrepancy &&
                  *s.singularities.min_discrepancy == Rat(1 - n, n),
              "minimal discrepancy");
        check(is_zero_vector(s.summary.barycenter), "vanishing barycenter");
        bool unstable = mumford_instability(s.singularities, 2);
        check(unstable == (n >= 4), "multiplicity bound flag");
        rows.push_back(
            {Int(n), s.summary.degree, *s.singularities.min_discrepancy, unstable});
    }
    return rows;
}

void save_jsonl(const std::vector<ClassifiedSurface>& surfaces, std::ostream& out) {
    for (const ClassifiedSurface& s : surfaces) out << surface_json(s).dump() << "\n";
}

std::vector<ClassifiedSurface> load_jsonl(std::istream& in) {
    std::vector<ClassifiedSurface> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line);
        if (!j.contains("vertices"))
            throw std::invalid_argument("load_jsonl: line without a \"vertices\" field");
        std::vector<Vec> verts;
        for (const json& jv : j.at("vertices")) {
            Vec v;
            for (const json& c : jv) {
                if (c.is_string())
                    v.push_back(Int(c.get<std::string>()));
                else
                    v.push_back(Int(c.get<long long>()));
            }
            verts.push_back(std::move(v));
        }
        out.push_back(classify_surface(FanoPolytope::make_fano(verts)));
    }
    return out;
}

} // namespace fano
