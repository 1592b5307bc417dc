#include "fano/report.hpp"

#include "json.hpp"

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fano {

namespace {

using nlohmann::json;

Int det3_local(const Vec& a, const Vec& b, const Vec& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
}

std::int64_t to_int64(const Int& v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::invalid_argument("report_json: vertex coordinate out of 64-bit range");
    return static_cast<std::int64_t>(v);
}

std::string verdict_str(BoundVerdict v) { return to_string(v); }

BoundVerdict verdict_from(const std::string& s) {
    if (s == "consistent") return BoundVerdict::consistent;
    if (s == "obstructed") return BoundVerdict::obstructed;
    if (s == "boundary") return BoundVerdict::boundary;
    throw std::invalid_argument("report_from_json: unknown bound verdict \"" + s + "\"");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("report_from_json: missing field \"") + key +
                                    "\"");
    return j.at(key);
}

std::string get_string(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        throw std::invalid_argument(std::string("report_from_json: field \"") + key +
                                    "\" must be a string");
    return v.get<std::string>();
}

Rat get_rat(const json& j, const char* key) { return parse_rat(get_string(j, key)); }

Int get_int(const json& j, const char* key) {
    const Rat r = get_rat(j, key);
    if (den(r) != 1)
        throw std::invalid_argument(std::string("report_from_json: field \"") + key +
                                    "\" must be an integer");
    return num(r);
}

bool get_bool(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_boolean())
        throw std::invalid_argument(std::string("report_from_json: field \"") + key +
                                    "\" must be a boolean");
    return v.get<bool>();
}

json entry_json(const SingularityEntry& e) {
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
    return je;
}

SingularityEntry entry_from(const json& je) {
    SingularityEntry e;
    const json& edge = field(je, "edge");
    if (!edge.is_number_integer())
        throw std::invalid_argument("report_from_json: entry edge must be an integer");
    e.edge_index = edge.get<int>();
    e.type = CyclicQuotientType{get_int(je, "m"), get_int(je, "q")};
    e.multiplicity = get_int(je, "multiplicity");
    if (je.contains("discrepancy")) e.discrepancy = get_rat(je, "discrepancy");
    if (je.contains("qg_def_dim")) e.qg_def_dim = get_int(je, "qg_def_dim");
    if (je.contains("t_witness")) {
        const json& w = je.at("t_witness");
        e.t_witness = TSingularityWitness{get_int(w, "d"), get_int(w, "n"), get_int(w, "a"),
                                          get_bool(w, "canonical")};
    }
    return e;
}

} // namespace

std::string singularity_summary(const SingularityReport& report) {
    std::vector<std::string> order;
    std::map<std::string, int> counts;
    for (const SingularityEntry& e : report.entries) {
        if (e.type.smooth()) continue;
        const std::string label = e.type.label();
        if (counts[label]++ == 0) order.push_back(label);
    }
    if (order.empty()) return "none";
    std::string out;
    for (const std::string& label : order) {
        if (!out.empty()) out += " + ";
        if (counts[label] > 1) out += std::to_string(counts[label]) + " x ";
        out += label;
    }
    return out;
}

AnalysisReport analyze_polytope(const FanoPolytope& P, std::string input_id) {
    AnalysisReport r;
    r.input = std::move(input_id);
    r.dim = P.dim();
    r.vertices = P.vertices();
    r.degree = degree(P);
    if (P.dim() == 2) {
        r.summary = summarize(P);
        r.singularities = classify_edges(P);
        r.ke = ke_toric_test(P);
        r.smoothable = r.singularities->all_t_or_smooth();
        r.bishop_surface = bishop_gromov_surface(r.singularities->gamma_max, r.degree);
        r.bishop_degree = bishop_degree_bound(2, r.summary->gorenstein_index, r.degree);
        return r;
    }
    // Threefold simplex: the torus-fixed point over each facet is a quotient
    // by a group of order |det| of the facet vertices; the worst one sets the
    // link volume ratio for the conical bound.
    Int gamma(1);
    const auto& V = P.vertices();
    for (int omit = 0; omit < 4; ++omit) {
        std::vector<Vec> f;
        for (int i = 0; i < 4; ++i)
            if (i != omit) f.push_back(V[static_cast<std::size_t>(i)]);
        Int d = det3_local(f[0], f[1], f[2]);
        if (d < 0) d = -d;
        gamma = std::max(gamma, d);
    }
    r.conical_ratio = make_rat(Int(1), gamma);
    r.conical = conical_obstruction(ObstructionInput{3, r.degree, *r.conical_ratio, {}});
    r.notes.push_back("threefold analysis covers the degree and the conical volume bound");
    return r;
}

std::string report_json(const AnalysisReport& r) {
    json verts = json::array();
    for (const Vec& v : r.vertices) {
        json jv = json::array();
        for (const Int& c : v) jv.push_back(to_int64(c));
        verts.push_back(jv);
    }
    json j;
    j["input"] = r.input;
    j["dim"] = r.dim;
    j["vertices"] = verts;
    j["degree"] = rat_str(r.degree);
    if (r.summary) {
        json bary = json::array();
        for (const Rat& c : r.summary->barycenter) bary.push_back(rat_str(c));
        j["summary"] = {{"degree", rat_str(r.summary->degree)},
                        {"picard_rank", r.summary->picard_rank},
                        {"gorenstein_index", r.summary->gorenstein_index.str()},
                        {"reflexive", r.summary->reflexive},
                        {"barycenter", bary}};
    }
    if (r.singularities) {
        json entries = json::array();
        for (const SingularityEntry& e : r.singularities->entries)
            entries.push_back(entry_json(e));
        j["singularities"] = {{"entries", entries},
                              {"gamma_max", r.singularities->gamma_max.str()}};
        if (r.singularities->min_discrepancy)
            j["singularities"]["min_discrepancy"] = rat_str(*r.singularities->min_discrepancy);
    }
    if (r.ke)
        j["ke"] = {{"ke_toric", r.ke->ke_toric},
                   {"soliton_only", r.ke->soliton_only},
                   {"notes", r.ke->notes}};
    if (r.smoothable) j["smoothable"] = *r.smoothable;
    if (r.bishop_surface || r.bishop_degree) {
        j["bishop"] = json::object();
        if (r.bishop_surface) j["bishop"]["surface"] = verdict_str(*r.bishop_surface);
        if (r.bishop_degree) j["bishop"]["degree_bound"] = verdict_str(*r.bishop_degree);
    }
    if (r.conical) {
        j["conical"] = {{"verdict", verdict_str(*r.conical)},
                        {"rhs", rat_str(obstruction_rhs(3))}};
        if (r.conical_ratio) j["conical"]["ratio"] = rat_str(*r.conical_ratio);
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j.dump();
}

AnalysisReport report_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("report_from_json: malformed JSON: ") +
                                    e.what());
    }
    AnalysisReport r;
    r.input = get_string(j, "input");
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer())
        throw std::invalid_argument("report_from_json: dim must be an integer");
    r.dim = dim.get<int>();
    const json& verts = field(j, "vertices");
    if (!verts.is_array())
        throw std::invalid_argument("report_from_json: vertices must be an array");
    for (const json& jv : verts) {
        if (!jv.is_array())
            throw std::invalid_argument("report_from_json: each vertex must be an array");
        Vec v;
        for (const json& c : jv) {
            if (!c.is_number_integer())
                throw std::invalid_argument("report_from_json: vertex coordinates must be integers");
            v.push_back(Int(c.get<std::int64_t>()));
        }
        r.vertices.push_back(std::move(v));
    }
    r.degree = get_rat(j, "degree");
    if (j.contains("summary")) {
        const json& s = j.at("summary");
        PolytopeSummary sum;
        sum.degree = get_rat(s, "degree");
        const json& rank = field(s, "picard_rank");
        if (!rank.is_number_integer())
            throw std::invalid_argument("report_from_json: picard_rank must be an integer");
        sum.picard_rank = rank.get<int>();
        sum.gorenstein_index = get_int(s, "gorenstein_index");
        sum.reflexive = get_bool(s, "reflexive");
        const json& bary = field(s, "barycenter");
        if (!bary.is_array())
            throw std::invalid_argument("report_from_json: barycenter must be an array");
        for (const json& c : bary) {
            if (!c.is_string())
                throw std::invalid_argument("report_from_json: barycenter entries must be strings");
            sum.barycenter.push_back(parse_rat(c.get<std::string>()));
        }
        r.summary = std::move(sum);
    }
    if (j.contains("singularities")) {
        const json& s = j.at("singularities");
        SingularityReport rep;
        const json& entries = field(s, "entries");
        if (!entries.is_array())
            throw std::invalid_argument("report_from_json: entries must be an array");
        for (const json& je : entries) rep.entries.push_back(entry_from(je));
        rep.gamma_max = get_int(s, "gamma_max");
        if (s.contains("min_discrepancy")) rep.min_discrepancy = get_rat(s, "min_discrepancy");
        r.singularities = std::move(rep);
    }
    if (j.contains("ke")) {
        const json& k = j.at("ke");
        KEVerdict v;
        v.ke_toric = get_bool(k, "ke_toric");
        v.soliton_only = get_bool(k, "soliton_only");
        const json& notes = field(k, "notes");
        if (!notes.is_array())
            throw std::invalid_argument("report_from_json: ke notes must be an array");
        for (const json& n : notes) {
            if (!n.is_string())
                throw std::invalid_argument("report_from_json: notes must be strings");
            v.notes.push_back(n.get<std::string>());
        }
        r.ke = std::move(v);
    }
    if (j.contains("smoothable")) r.smoothable = get_bool(j, "smoothable");
    if (j.contains("bishop")) {
        const json& b = j.at("bishop");
        if (b.contains("surface")) r.bishop_surface = verdict_from(get_string(b, "surface"));
        if (b.contains("degree_bound"))
            r.bishop_degree = verdict_from(get_string(b, "degree_bound"));
    }
    if (j.contains("conical")) {
        const json& c = j.at("conical");
        r.conical = verdict_from(get_string(c, "verdict"));
        if (c.contains("ratio")) r.conical_ratio = get_rat(c, "ratio");
    }
    if (j.contains("notes")) {
        const json& notes = j.at("notes");
        if (!notes.is_array())
            throw std::invalid_argument("report_from_json: notes must be an array");
        for (const json& n : notes) {
            if (!n.is_string())
                throw std::invalid_argument("report_from_json: notes must be strings");
            r.notes.push_back(n.get<std::string>());
        }
    }
    return r;
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    auto line = [&out](const std::string& key, const std::string& value) {
        out << key;
        for (std::size_t i = key.size(); i < 18; ++i) out << ' ';
        out << value << "\n";
    };
    auto yesno = [](bool b) { return b ? std::string("yes") : std::string("no"); };

    line("input:", r.input);
    line("dimension:", std::to_string(r.dim));
    {
        std::string vs;
        for (const Vec& v : r.vertices) {
            if (!vs.empty()) vs += ", ";
            vs += "(";
            for (std::size_t i = 0; i < v.size(); ++i)
                vs += (i ? ", " : "") + v[i].str();
            vs += ")";
        }
        line("vertices:", vs);
    }
    line("degree:", rat_str(r.degree));
    if (r.summary) {
        line("picard rank:", std::to_string(r.summary->picard_rank));
        line("gorenstein index:", r.summary->gorenstein_index.str());
        line("reflexive:", yesno(r.summary->reflexive));
        std::string bc = "(";
        for (std::size_t i = 0; i < r.summary->barycenter.size(); ++i)
            bc += (i ? ", " : "") + rat_str(r.summary->barycenter[i]);
        line("barycenter:", bc + ")");
    }
    if (r.singularities) {
        line("singularities:", singularity_summary(*r.singularities));
        if (r.singularities->min_discrepancy)
            line("min discrepancy:", rat_str(*r.singularities->min_discrepancy));
    }
    if (r.ke)
        line("KE metric:",
             r.ke->ke_toric ? "yes (toric criterion)"
                            : (r.ke->soliton_only ? "no (Kahler-Ricci soliton only)" : "no"));
    if (r.smoothable) line("smoothable:", yesno(*r.smoothable));
    if (r.bishop_surface) line("bishop (surface):", verdict_str(*r.bishop_surface));
    if (r.bishop_degree) line("bishop (degree):", verdict_str(*r.bishop_degree));
    if (r.conical_ratio) line("link ratio:", rat_str(*r.conical_ratio));
    if (r.conical) line("conical bound:", verdict_str(*r.conical));
    for (const std::string& n : r.notes) line("note:", n);
    return out.str();
}

} // namespace fano
