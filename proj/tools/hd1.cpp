// Command-line front end: constructions and fixtures as JSON, point and
// label-grid rendering, the verification battery, CNF export, DIMACS
// solving, maximum-size search, canonical forms and isomorphism tests.
//
// Exit codes: 0 success, 1 failed check or failed operation, 2 bad usage or
// malformed input, 3 external engine requested but not configured.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hd1/cnf.hpp"
#include "hd1/constructions.hpp"
#include "hd1/encode.hpp"
#include "hd1/error.hpp"
#include "hd1/grid.hpp"
#include "hd1/lattice.hpp"
#include "hd1/solver.hpp"
#include "hd1/symmetry.hpp"
#include "hd1/verify.hpp"

namespace {

using namespace hd1;

int exit_code_for(errc kind) {
    switch (kind) {
        case errc::config: return 3;
        case errc::usage:
        case errc::parse:
        case errc::capability: return 2;
        default: return 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::usage, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) fail(errc::usage, "cannot write " + path);
    out << text;
}

// A set argument is either a bundled fixture name or a JSON file path.
VertexSet load_set(const std::string& arg) {
    if (is_fixture(arg)) return fixture_set(arg);
    return VertexSet::from_json(read_file(arg));
}

struct EngineFlags {
    std::string engine = "embedded";
    std::string solver_path;

    SolverConfig config() const {
        SolverConfig cfg;
        if (engine == "external" || !solver_path.empty()) {
            cfg.engine = Engine::External;
            cfg.solver_path = solver_path;
        }
        return cfg;
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--engine", engine, "SAT engine")
            ->check(CLI::IsMember({"embedded", "external"}));
        cmd->add_option("--solver-path", solver_path,
                        "external solver command (overrides HD1_SAT_SOLVER; implies external)");
    }
};

void print_report_line(const CheckReport& r) {
    std::printf("%-8s %-18s %s (%lld ms)%s%s\n", r.status.c_str(), r.check.c_str(),
                r.params.c_str(), static_cast<long long>(r.wall_ms),
                r.note.empty() ? "" : " -- ", r.note.c_str());
}

std::string reports_json(const std::vector<CheckReport>& reports) {
    std::string out = "[\n";
    for (size_t i = 0; i < reports.size(); ++i) {
        out += reports[i].to_json();
        if (i + 1 < reports.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

const std::map<int, int>& known_maxima() {
    static const std::map<int, int> kMax = {{1, 2}, {2, 4}, {3, 10}, {4, 29}, {5, 87}};
    return kMax;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced degree-1 subsets of the ternary Hamming lattice"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "emit a construction or fixture as JSON");
    gen->require_subcommand(1);
    int gen_n = 4, gen_d = 1;
    std::string gen_out, gen_name;
    auto* gen_dn = gen->add_subcommand("dn", "iterated construction D_n");
    gen_dn->add_option("--n", gen_n, "dimension")->required();
    gen_dn->add_option("--out", gen_out, "output file (default stdout)");
    auto* gen_degd = gen->add_subcommand("degd", "degree-d generalisation");
    gen_degd->add_option("--n", gen_n, "dimension")->required();
    gen_degd->add_option("--d", gen_d, "degree bound")->required();
    gen_degd->add_option("--out", gen_out, "output file (default stdout)");
    auto* gen_fixture = gen->add_subcommand("fixture", "bundled example set or grid");
    gen_fixture->add_option("name", gen_name, "fixture name")->required();
    gen_fixture->add_option("--out", gen_out, "output file (default stdout)");

    // ---- show ---------------------------------------------------------
    auto* show = app.add_subcommand("show", "render a set or grid as text");
    std::string show_target, show_out;
    bool show_labels = false;
    int show_axis = 1;
    show->add_option("target", show_target, "fixture name or JSON file")->required();
    show->add_flag("--labels", show_labels, "render collapsed cell labels instead of points");
    show->add_option("--axis", show_axis, "collapse axis for --labels on a point set");
    show->add_option("--out", show_out, "output file (default stdout)");

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run consistency checks");
    std::string verify_check = "all", verify_out;
    int verify_n = -1, verify_samples = 100;
    uint32_t verify_seed = 0;
    EngineFlags verify_engine;
    verify->add_option("check", verify_check, "one of: all, constructions, dn, extremal, uniqueness, skew, forbidden, lemmas")
        ->check(CLI::IsMember({"all", "constructions", "dn", "extremal", "uniqueness", "skew",
                               "forbidden", "lemmas"}));
    verify->add_option("--n", verify_n, "dimension for dn/extremal/uniqueness/skew");
    verify->add_option("--samples", verify_samples, "sample count for lemmas");
    verify->add_option("--seed", verify_seed, "seed for randomized path policies");
    verify->add_option("--out", verify_out, "write the JSON report array here");
    verify_engine.attach(verify);

    // ---- encode -------------------------------------------------------
    auto* encode = app.add_subcommand("encode", "write a CNF instance as DIMACS");
    std::string encode_kind, encode_out;
    int encode_n = 3, encode_axis = 1, encode_target = -1;
    encode->add_option("kind", encode_kind, "one of: grid, vertex, skew, extremal")
        ->required()
        ->check(CLI::IsMember({"grid", "vertex", "skew", "extremal"}));
    encode->add_option("--n", encode_n, "dimension (grid dimension for grid/skew)")->required();
    encode->add_option("--axis", encode_axis, "skew direction (skew only)");
    encode->add_option("--d", encode_target,
                       "target cardinality for extremal (default: the known maximum)");
    encode->add_option("--out", encode_out, "output file (default stdout)");

    // ---- solve --------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "run an engine on a DIMACS file");
    std::string solve_file;
    int solve_limit = 0;
    EngineFlags solve_engine;
    solve->add_option("file", solve_file, "DIMACS CNF file")->required();
    solve->add_option("--limit", solve_limit, "enumerate up to this many models (0 = one solve)");
    solve_engine.attach(solve);

    // ---- search -------------------------------------------------------
    auto* search = app.add_subcommand("search", "probe the maximum size by linear descent");
    int search_n = 3;
    EngineFlags search_engine;
    search->add_option("--n", search_n, "dimension")->required();
    search_engine.attach(search);

    // ---- canon --------------------------------------------------------
    auto* canon = app.add_subcommand("canon", "canonical form of a point set");
    std::string canon_target, canon_out;
    canon->add_option("target", canon_target, "fixture name or JSON file")->required();
    canon->add_option("--out", canon_out, "output file (default stdout)");

    // ---- iso ----------------------------------------------------------
    auto* iso = app.add_subcommand("iso", "test two point sets for isomorphism");
    std::string iso_a, iso_b;
    iso->add_option("first", iso_a, "fixture name or JSON file")->required();
    iso->add_option("second", iso_b, "fixture name or JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen_dn->parsed()) {
            write_output(gen_out, canonical_dn(gen_n).to_json());
        } else if (gen_degd->parsed()) {
            write_output(gen_out, degree_d_set(gen_n, gen_d).to_json());
        } else if (gen_fixture->parsed()) {
            if (!is_fixture(gen_name)) fail(errc::usage, "unknown fixture: " + gen_name);
            write_output(gen_out, gen_name == "t3" ? fixture_set(gen_name).to_json()
                                                   : fixture_grid(gen_name).to_json());
        } else if (show->parsed()) {
            std::string text;
            if (is_fixture(show_target) && show_target != "t3") {
                const LabelGrid g = fixture_grid(show_target);
                text = show_labels ? render_grid(g) : render_set(expand(g));
            } else {
                const std::string raw =
                    is_fixture(show_target) ? fixture_set(show_target).to_json() : read_file(show_target);
                if (raw.find("\"cells\"") != std::string::npos) {
                    const LabelGrid g = LabelGrid::from_json(raw);
                    text = show_labels ? render_grid(g) : render_set(expand(g));
                } else {
                    const VertexSet s = VertexSet::from_json(raw);
                    text = show_labels ? render_grid(collapse(s, show_axis)) : render_set(s);
                }
            }
            write_output(show_out, text);
        } else if (verify->parsed()) {
            const SolverConfig cfg = verify_engine.config();
            std::vector<CheckReport> reports;
            if (verify_check == "all") {
                reports = run_standard_checks(cfg, verify_seed);
            } else if (verify_check == "constructions") {
                reports.push_back(verify_constructions());
            } else if (verify_check == "dn") {
                if (verify_n < 0) fail(errc::usage, "verify dn needs --n");
                reports.push_back(verify_dn_structure(verify_n, verify_seed));
            } else if (verify_check == "extremal") {
                if (verify_n < 0) fail(errc::usage, "verify extremal needs --n");
                reports.push_back(verify_extremal(verify_n, cfg));
            } else if (verify_check == "uniqueness") {
                if (verify_n < 0) fail(errc::usage, "verify uniqueness needs --n");
                reports.push_back(verify_canonical_uniqueness(verify_n, cfg));
            } else if (verify_check == "skew") {
                if (verify_n < 0) fail(errc::usage, "verify skew needs --n");
                reports.push_back(verify_skew(verify_n, cfg));
            } else if (verify_check == "forbidden") {
                reports.push_back(verify_forbidden(cfg));
            } else if (verify_check == "lemmas") {
                reports.push_back(verify_structure_lemmas(verify_samples, cfg));
            }
            for (const CheckReport& r : reports) print_report_line(r);
            if (!verify_out.empty()) write_output(verify_out, reports_json(reports));
            return all_passed(reports) ? 0 : 1;
        } else if (encode->parsed()) {
            CnfFormula f;
            if (encode_kind == "grid") {
                f = encode_grid_deg1(encode_n);
            } else if (encode_kind == "vertex") {
                f = encode_vertex_deg1(encode_n);
            } else if (encode_kind == "skew") {
                f = encode_skew(encode_n, encode_axis);
            } else {
                f = encode_vertex_deg1(encode_n);
                int target = encode_target;
                if (target < 0) {
                    const auto it = known_maxima().find(encode_n);
                    if (it == known_maxima().end())
                        fail(errc::usage, "no known maximum at this dimension; pass --d");
                    target = it->second;
                }
                encode_cardinality_atleast(f, vertex_projection(encode_n), target);
            }
            write_output(encode_out, f.dimacs());
        } else if (solve->parsed()) {
            const SolverConfig cfg = solve_engine.config();
            const CnfFormula f = parse_dimacs(read_file(solve_file));
            if (solve_limit > 0) {
                std::vector<int> projection(size_t(f.vars));
                for (int v = 1; v <= f.vars; ++v) projection[size_t(v - 1)] = v;
                const ModelList ml = enumerate_models(f, projection, solve_limit, cfg);
                for (size_t i = 0; i < ml.models.size(); ++i) {
                    std::cout << "c model " << (i + 1) << "\nv";
                    for (int v = 1; v <= f.vars; ++v)
                        std::cout << ' ' << (ml.models[i][size_t(v - 1)] ? v : -v);
                    std::cout << " 0\n";
                }
                std::cout << "c " << ml.models.size() << " model(s)"
                          << (ml.truncated ? ", truncated at limit" : ", exhaustive") << "\n";
            } else {
                const SolveReport r = solve_cnf(f, cfg);
                if (!r.satisfiable) {
                    std::cout << "s UNSATISFIABLE\n";
                } else {
                    std::cout << "s SATISFIABLE\nv";
                    for (int v = 1; v <= f.vars; ++v)
                        std::cout << ' ' << (r.model[size_t(v)] ? v : -v);
                    std::cout << " 0\n";
                }
            }
        } else if (search->parsed()) {
            const SolverConfig cfg = search_engine.config();
            const int start = pow3(search_n - 1) + 9;
            int best = -1;
            for (int k = start; k >= 1; --k) {
                CnfFormula f = encode_vertex_deg1(search_n);
                encode_cardinality_atleast(f, vertex_projection(search_n), k);
                const bool sat = solve_cnf(f, cfg).satisfiable;
                std::cout << "size " << k << ": " << (sat ? "SAT" : "UNSAT") << "\n";
                if (sat) {
                    best = k;
                    break;
                }
            }
            std::cout << "maximum at n=" << search_n << ": " << best << "\n";
        } else if (canon->parsed()) {
            write_output(canon_out, canonical_form(load_set(canon_target)).to_json());
        } else if (iso->parsed()) {
            const VertexSet a = load_set(iso_a);
            const VertexSet b = load_set(iso_b);
            const bool same = a.n() == b.n() && a.size() == b.size() && are_isomorphic(a, b);
            std::cout << (same ? "isomorphic" : "not isomorphic") << "\n";
            return same ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return 0;
}
