// Command-line surface for the library: per-polytope analysis reports,
// the rank-one and low-index classifications, pencil stability, and the
// threefold conical obstruction, with JSON file input and exact output.
//
// Exit codes: 0 success, 2 validation failure (invalid polytope, pencil, or
// argument values), 3 malformed JSON input. Set FANO_LOG to any nonempty
// value other than 0 for progress logging on stderr.

#include "CLI11.hpp"
#include "json.hpp"

#include "fano/classify.hpp"
#include "fano/pencil.hpp"
#include "fano/report.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using fano::Int;
using fano::Rat;
using fano::Vec;
using nlohmann::json;

bool verbose_logging() {
    const char* v = std::getenv("FANO_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void vlog(const std::string& msg) {
    if (verbose_logging()) std::cerr << "[fano] " << msg << "\n";
}

// {"dim": n, "vertices": [[int, ...], ...]}; coordinates may also arrive as
// integer strings. Throws std::invalid_argument for bad values.
fano::FanoPolytope polytope_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices"))
        throw std::invalid_argument("polytope file: expected an object with a vertices array");
    const json& verts = doc.at("vertices");
    if (!verts.is_array())
        throw std::invalid_argument("polytope file: vertices must be an array");
    std::vector<Vec> pts;
    for (const json& jv : verts) {
        if (!jv.is_array())
            throw std::invalid_argument("polytope file: each vertex must be an array");
        Vec v;
        for (const json& c : jv) {
            if (c.is_number_integer())
                v.push_back(Int(c.get<std::int64_t>()));
            else if (c.is_string()) {
                const Rat r = fano::parse_rat(c.get<std::string>());
                if (fano::den(r) != 1)
                    throw std::invalid_argument("polytope file: coordinates must be integers");
                v.push_back(fano::num(r));
            } else {
                throw std::invalid_argument("polytope file: coordinates must be integers");
            }
        }
        pts.push_back(std::move(v));
    }
    if (doc.contains("dim")) {
        if (!doc.at("dim").is_number_integer())
            throw std::invalid_argument("polytope file: dim must be an integer");
        const int dim = doc.at("dim").get<int>();
        for (const Vec& v : pts)
            if (static_cast<int>(v.size()) != dim)
                throw std::invalid_argument("polytope file: vertex length does not match dim");
    }
    return fano::FanoPolytope::make_fano(pts);
}

// Reads and parses a whole file; distinguishes I/O and JSON-syntax failures
// by exit code through the two exception types.
json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return json::parse(buffer.str()); // throws nlohmann::json::parse_error
}

int cmd_analyze(const std::string& path, bool as_text) {
    json doc;
    try {
        doc = parse_json_file(path);
    } catch (const json::parse_error& e) {
        std::cerr << "error: malformed JSON in " << path << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        const fano::FanoPolytope P = polytope_from_json(doc);
        const fano::AnalysisReport r = fano::analyze_polytope(P, path);
        if (as_text)
            std::cout << fano::report_text(r);
        else
            std::cout << fano::report_json(r) << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_batch(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 2;
    }
    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path);
        if (!file_out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
    }
    std::ostream& out = out_path.empty() ? std::cout : file_out;

    std::string line;
    long long lineno = 0, analyzed = 0, skipped = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const json doc = json::parse(line);
            const fano::FanoPolytope P = polytope_from_json(doc);
            const fano::AnalysisReport r =
                fano::analyze_polytope(P, path + ":" + std::to_string(lineno));
            out << fano::report_json(r) << "\n";
            ++analyzed;
        } catch (const std::exception& e) {
            std::cerr << "warning: line " << lineno << " skipped: " << e.what() << "\n";
            ++skipped;
        }
    }
    std::cerr << "batch: " << analyzed << " analyzed, " << skipped << " skipped\n";
    return 0;
}

int cmd_classify_rank1() {
    const std::vector<fano::ClassifiedSurface> classes = fano::classify_rank1();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const fano::ClassifiedSurface& s = classes[i];
        std::cout << "class " << (i + 1) << ": degree " << fano::rat_str(s.summary.degree)
                  << ", picard rank " << s.summary.picard_rank << ", singularities "
                  << fano::singularity_summary(s.singularities) << "\n";
    }
    std::cout << classes.size() << " classes\n";
    return 0;
}

int cmd_enumerate(int max_index, int box, bool stabilize, const std::string& out_path) {
    fano::EnumerationConfig cfg;
    cfg.max_index = max_index;
    cfg.coordinate_box = box > 0 ? box : fano::coordinate_box_floor(max_index);
    cfg.stabilization_check = stabilize;
    try {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<fano::ClassifiedSurface> all = fano::enumerate_ldp(cfg);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        vlog("enumerated " + std::to_string(all.size()) + " classes at index <= " +
             std::to_string(max_index) + " in " + std::to_string(elapsed) + " ms");
        const std::size_t zero = fano::filter_barycenter_zero(all).size();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            fano::save_jsonl(all, out);
            vlog("wrote " + out_path);
        }
        std::cout << all.size() << " classes, " << zero << " barycenter-zero\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify_table() {
    try {
        const std::vector<fano::TableRow> rows = fano::verify_classification_table();
        for (const fano::TableRow& row : rows) std::cout << "ok: " << row.name << "\n";
        std::cout << rows.size() << " rows verified\n";
        return 0;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 2;
    }
}

int cmd_pencil(const std::string& path) {
    json doc;
    try {
        doc = parse_json_file(path);
    } catch (const json::parse_error& e) {
        std::cerr << "error: malformed JSON in " << path << ": " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        std::istringstream round_trip(doc.dump());
        const fano::QuadricPencil p = fano::load_pencil(round_trip);
        const fano::BinaryForm disc = fano::discriminant_form(p);
        const fano::MultiplicityProfile profile = fano::multiplicity_profile(disc);
        std::vector<int> mults;
        for (const fano::ProfilePart& part : profile.parts)
            for (int i = 0; i < part.degree; ++i) mults.push_back(part.multiplicity);
        std::sort(mults.rbegin(), mults.rend());
        std::cout << "discriminant degree " << disc.degree << ", root multiplicities";
        for (std::size_t i = 0; i < mults.size(); ++i)
            std::cout << (i ? " + " : " ") << mults[i];
        std::cout << "\n";
        const fano::GITVerdict v = fano::pencil_stability(p);
        std::cout << "verdict: " << fano::to_string(v.verdict) << "\n";
        std::cout << "witness: " << v.witness << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_obstruct3(int d) {
    if (d < 1) {
        std::cerr << "error: --d must be at least 1\n";
        return 2;
    }
    const fano::FanoPolytope X = fano::xd_threefold(d);
    const fano::AnalysisReport r = fano::analyze_polytope(X, "X_" + std::to_string(d));
    const Rat lhs = r.degree / *r.conical_ratio;
    const Rat rhs = fano::obstruction_rhs(3);
    const char* rel = lhs > rhs ? " > " : (lhs == rhs ? " = " : " <= ");
    std::cout << "degree " << fano::rat_str(r.degree) << ", LHS " << fano::rat_str(lhs) << rel
              << fano::rat_str(rhs) << ": " << fano::to_string(*r.conical) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-polytope analysis of toric Fano varieties"};
    app.require_subcommand(1);
    int rc = 0;

    std::string analyze_path;
    bool analyze_text = false;
    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one polytope JSON file");
    analyze->add_option("path", analyze_path, "polytope file {\"dim\": n, \"vertices\": [[..]]}")
        ->required();
    CLI::Option* text_flag = analyze->add_flag("--text", analyze_text, "plain-text table output");
    analyze->add_flag("--json", "JSON output (the default)")->excludes(text_flag);
    analyze->callback([&] { rc = cmd_analyze(analyze_path, analyze_text); });

    std::string batch_path, batch_out;
    CLI::App* batch = app.add_subcommand("batch", "Analyze a JSON-lines polytope database");
    batch->add_option("path", batch_path, "one polytope object per line")->required();
    batch->add_option("--out", batch_out, "write reports to this file instead of stdout");
    batch->callback([&] { rc = cmd_batch(batch_path, batch_out); });

    CLI::App* rank1 =
        app.add_subcommand("classify-rank1", "The three rank-one triangle classes");
    rank1->callback([&] { rc = cmd_classify_rank1(); });

    int enum_index = 1, enum_box = 0;
    bool enum_stabilize = false;
    std::string enum_out;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate low-index Fano polygons");
    enumerate->add_option("--max-index", enum_index, "largest Gorenstein index (default 1)");
    enumerate->add_option("--box", enum_box, "coordinate search box (default: proven floor)");
    enumerate->add_flag("--stabilize", enum_stabilize, "re-run with a larger box and compare");
    enumerate->add_option("--out", enum_out, "write one JSON class per line to this file");
    enumerate->callback([&] { rc = cmd_enumerate(enum_index, enum_box, enum_stabilize, enum_out); });

    CLI::App* table =
        app.add_subcommand("verify-table", "Check the seven-row classification table");
    table->callback([&] { rc = cmd_verify_table(); });

    std::string pencil_path;
    CLI::App* pencil = app.add_subcommand("pencil", "GIT stability of a quadric pencil file");
    pencil->add_option("path", pencil_path, "pencil file {\"size\": k, \"A\": [[..]], \"B\": [[..]]}")
        ->required();
    pencil->callback([&] { rc = cmd_pencil(pencil_path); });

    int obstruct_d = 1;
    CLI::App* obstruct =
        app.add_subcommand("obstruct3", "Conical volume bound for the degree-d threefold cone");
    obstruct->add_option("--d", obstruct_d, "family parameter d >= 1")->required();
    obstruct->callback([&] { rc = cmd_obstruct3(obstruct_d); });

    CLI11_PARSE(app, argc, argv);
    return rc;
}
