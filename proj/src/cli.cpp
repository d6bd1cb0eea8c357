#include "snake/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "snake/errors.hpp"
#include "snake/exact_matrix.hpp"
#include "snake/identities.hpp"
#include "snake/io.hpp"
#include "snake/matchings.hpp"
#include "snake/snake_graph.hpp"
#include "snake/tri_dag.hpp"

namespace snake::cli {

namespace {

constexpr std::uint64_t kDefaultCap = 1000000;

std::uint64_t default_cap() {
    if (const char* env = std::getenv("SNAKE_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError("SNAKE_CAP is not a non-negative integer");
        }
    }
    return kDefaultCap;
}

Assignment parse_assignment(const std::string& s) {
    if (s == "standard") return Assignment::Standard;
    if (s == "opposite") return Assignment::Opposite;
    throw UsageError("--assignment must be 'standard' or 'opposite'");
}

std::string plain_edge(const Edge& e) {
    std::ostringstream os;
    os << '(' << e.a.x << ',' << e.a.y << ")-(" << e.b.x << ',' << e.b.y << ')';
    return os.str();
}

std::string plain_matching(const PerfectMatching& m) {
    std::string out;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (i > 0) out += ' ';
        out += plain_edge(m.edges[i]);
    }
    return out;
}

std::string plain_tiling(const Tiling& t) {
    std::string out;
    for (std::size_t i = 0; i < t.dominoes.size(); ++i) {
        if (i > 0) out += ' ';
        const Domino& d = t.dominoes[i];
        std::ostringstream os;
        os << '(' << d.a.x << ',' << d.a.y << ")+(" << d.b.x << ',' << d.b.y << ')';
        out += os.str();
    }
    return out;
}

std::string plain_route(const TriDag& dag, const Route& r) {
    std::string out;
    for (std::size_t p = 0; p < r.paths.size(); ++p) {
        if (p > 0) out += " ; ";
        for (std::size_t i = 0; i < r.paths[p].size(); ++i) {
            if (i > 0) out += ' ';
            out += plain_edge(dag.arcs()[static_cast<std::size_t>(r.paths[p][i])].edge);
        }
    }
    return out;
}

void print_matrix_plain(std::ostream& out, const ExactMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j > 0) out << ' ';
            out << m.at(i, j);
        }
        out << '\n';
    }
}

std::string format_report(const IdentityReport& r) {
    std::string line = r.identity + " " + r.parameter + ": " +
                       (r.holds ? "holds " : "FAILS ") + r.left.str() +
                       (r.holds ? " = " : " vs ") + r.right.str();
    if (!r.note.empty()) line += " [" + r.note + "]";
    return line;
}

struct Options {
    std::string spec;
    std::string assignment = "standard";
    std::string format = "plain";
    std::uint64_t cap = 0;
    bool cap_set = false;

    std::uint64_t effective_cap() const { return cap_set ? cap : default_cap(); }
    Assignment assign() const { return parse_assignment(assignment); }
    bool json() const {
        if (format == "json") return true;
        if (format == "plain") return false;
        throw UsageError("--format must be 'plain' or 'json'");
    }
};

void add_common(CLI::App* cmd, Options& o, bool with_assignment, bool with_cap) {
    cmd->add_option("spec", o.spec, "graph spec: word:RURU | cf:[2,2,2] | chains:h:2,2,4")
        ->required();
    if (with_assignment)
        cmd->add_option("--assignment", o.assignment, "standard | opposite");
    if (with_cap) {
        auto* opt = cmd->add_option("--cap", o.cap, "enumeration cap (default SNAKE_CAP or 1e6)");
        cmd->callback([&o, opt] { o.cap_set = opt->count() > 0; });
    }
    cmd->add_option("--format", o.format, "plain | json");
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"snake graphs, perfect matchings and route determinants"};
    app.require_subcommand(1);

    Options count_o, cf_o, chains_o, matrix_o, det_o, routes_o, matchings_o, tilings_o,
        export_o;
    bool cf_raw = false;
    bool det_verbose = false;

    add_common(app.add_subcommand("count", "number of perfect matchings"), count_o, false,
               false);

    auto* cf_cmd = app.add_subcommand("cf", "continued fraction of the graph");
    add_common(cf_cmd, cf_o, false, false);
    cf_cmd->add_flag("--raw", cf_raw, "raw run lengths (may end in 1)");

    add_common(app.add_subcommand("chains", "chain decomposition"), chains_o, false, false);

    add_common(app.add_subcommand("matrix", "path matrix of the contracted graph"), matrix_o,
               true, false);

    auto* det_cmd = app.add_subcommand("det", "determinant of the path matrix");
    add_common(det_cmd, det_o, true, false);
    det_cmd->add_flag("--verbose", det_verbose, "also print the matrix");

    add_common(app.add_subcommand("routes", "enumerate k-routes"), routes_o, true, true);
    add_common(app.add_subcommand("matchings", "enumerate perfect matchings"), matchings_o,
               false, true);
    add_common(app.add_subcommand("tilings", "enumerate snake graph tilings"), tilings_o, false,
               true);

    auto* verify_cmd = app.add_subcommand("verify", "check determinant identities");
    std::string verify_name;
    bool verify_all = false;
    int k_max = 10;
    std::string verify_format = "plain";
    verify_cmd->add_option("identity", verify_name,
                           "one of: catalan-fib-odd catalan-fib-even ladder-odd ladder-even "
                           "hankel-shift-unit general-fib pell-odd pell-even");
    verify_cmd->add_flag("--all", verify_all, "verify every identity");
    verify_cmd->add_option("--k-max", k_max, "largest parameter (default 10)");
    verify_cmd->add_option("--format", verify_format, "plain | json");

    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel matrix of a sequence");
    std::string hankel_seq = "catalan";
    std::string hankel_file;
    int hankel_n = 0;
    bool hankel_shifted = false;
    bool hankel_det = false;
    std::string hankel_format = "plain";
    hankel_cmd->add_option("--seq", hankel_seq, "catalan | fibonacci | pell");
    hankel_cmd->add_option("--file", hankel_file, "custom sequence file (plain or b-file)");
    hankel_cmd->add_option("--n", hankel_n, "matrix order")->required();
    hankel_cmd->add_flag("--shifted", hankel_shifted, "use the shifted window H'");
    hankel_cmd->add_flag("--det", hankel_det, "print the determinant instead of the matrix");
    hankel_cmd->add_option("--format", hankel_format, "plain | json");

    auto* export_cmd = app.add_subcommand("export", "write DOT or JSON");
    std::string export_what = "tridag";
    std::string export_out;
    add_common(export_cmd, export_o, true, false);
    export_cmd->add_option("--what", export_what, "tridag | graph");
    export_cmd->add_option("--out", export_out, "output path (default stdout)");
    export_o.format = "dot";

    try {
        try {
            app.parse(argc, argv);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return 0;
        } catch (const CLI::ParseError& e) {
            err << "UsageError: " << e.what() << '\n';
            return 2;
        }

        if (app.got_subcommand("count")) {
            out << count_matchings(parse_graph_spec(count_o.spec)) << '\n';
        } else if (app.got_subcommand("cf")) {
            ContinuedFraction cf = snake_to_cf(parse_graph_spec(cf_o.spec),
                                               cf_raw ? CfForm::Raw : CfForm::Canonical);
            out << format_cf(cf) << '\n';
        } else if (app.got_subcommand("chains")) {
            out << format_chains(chain_decomposition(parse_graph_spec(chains_o.spec))) << '\n';
        } else if (app.got_subcommand("matrix")) {
            ExactMatrix m = path_matrix(contract(parse_graph_spec(matrix_o.spec),
                                                 matrix_o.assign()));
            if (matrix_o.json())
                out << to_json(m).dump() << '\n';
            else
                print_matrix_plain(out, m);
        } else if (app.got_subcommand("det")) {
            ExactMatrix m = path_matrix(contract(parse_graph_spec(det_o.spec), det_o.assign()));
            if (det_verbose) print_matrix_plain(out, m);
            out << determinant(m) << '\n';
        } else if (app.got_subcommand("routes")) {
            TriDag dag = contract(parse_graph_spec(routes_o.spec), routes_o.assign());
            std::vector<Route> routes = enumerate_routes(dag, routes_o.effective_cap());
            if (routes_o.json()) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Route& r : routes) arr.push_back(to_json(dag, r));
                out << arr.dump() << '\n';
            } else {
                out << routes.size() << '\n';
                for (const Route& r : routes) out << plain_route(dag, r) << '\n';
            }
        } else if (app.got_subcommand("matchings")) {
            SnakeGraph g = parse_graph_spec(matchings_o.spec);
            std::vector<PerfectMatching> ms =
                enumerate_matchings(g, matchings_o.effective_cap());
            if (matchings_o.json()) {
                nlohmann::json arr = nlohmann::json::array();
                for (const PerfectMatching& m : ms) arr.push_back(to_json(m));
                out << arr.dump() << '\n';
            } else {
                out << ms.size() << '\n';
                for (const PerfectMatching& m : ms) out << plain_matching(m) << '\n';
            }
        } else if (app.got_subcommand("tilings")) {
            SnakeGraph g = parse_graph_spec(tilings_o.spec);
            std::vector<PerfectMatching> ms = enumerate_matchings(g, tilings_o.effective_cap());
            std::vector<Tiling> ts;
            ts.reserve(ms.size());
            for (const PerfectMatching& m : ms) ts.push_back(matching_to_tiling(g, m));
            std::sort(ts.begin(), ts.end());
            if (tilings_o.json()) {
                nlohmann::json arr = nlohmann::json::array();
                for (const Tiling& t : ts) arr.push_back(to_json(t));
                out << arr.dump() << '\n';
            } else {
                out << ts.size() << '\n';
                for (const Tiling& t : ts) out << plain_tiling(t) << '\n';
            }
        } else if (app.got_subcommand("verify")) {
            std::vector<std::string> names;
            if (verify_all) {
                names = identity_names();
            } else if (!verify_name.empty()) {
                names.push_back(verify_name);
            } else {
                throw UsageError("verify needs an identity name or --all");
            }
            const bool as_json = verify_format == "json";
            if (!as_json && verify_format != "plain")
                throw UsageError("--format must be 'plain' or 'json'");
            bool all_hold = true;
            for (const std::string& name : names) {
                for (const IdentityReport& r : verify_identity(name, k_max)) {
                    all_hold = all_hold && r.holds;
                    if (as_json)
                        out << to_json(r).dump() << '\n';
                    else
                        out << format_report(r) << '\n';
                }
            }
            if (!all_hold) return 3;
        } else if (app.got_subcommand("hankel")) {
            SequenceKind kind = SequenceKind::catalan();
            if (!hankel_file.empty()) {
                kind = ingest_sequence_file(hankel_file);
            } else if (hankel_seq == "catalan") {
                kind = SequenceKind::catalan();
            } else if (hankel_seq == "fibonacci") {
                kind = SequenceKind::fibonacci();
            } else if (hankel_seq == "pell") {
                kind = SequenceKind::pell();
            } else {
                throw UsageError("--seq must be catalan, fibonacci or pell (or use --file)");
            }
            if (hankel_n < 1) throw UsageError("--n must be >= 1");
            ExactMatrix m = hankel(kind, hankel_n, hankel_shifted);
            if (hankel_det) {
                out << determinant(m) << '\n';
            } else if (hankel_format == "json") {
                out << to_json(m).dump() << '\n';
            } else if (hankel_format == "plain") {
                print_matrix_plain(out, m);
            } else {
                throw UsageError("--format must be 'plain' or 'json'");
            }
        } else if (app.got_subcommand("export")) {
            SnakeGraph g = parse_graph_spec(export_o.spec);
            std::string payload;
            if (export_what == "graph") {
                if (export_o.format == "json")
                    payload = to_json(g).dump() + "\n";
                else
                    throw UsageError("graph export supports --format=json");
            } else if (export_what == "tridag") {
                TriDag dag = contract(g, export_o.assign());
                if (export_o.format == "dot")
                    payload = to_dot(dag, g);
                else if (export_o.format == "json")
                    payload = to_json(dag).dump() + "\n";
                else
                    throw UsageError("--format must be 'dot' or 'json'");
            } else {
                throw UsageError("--what must be 'tridag' or 'graph'");
            }
            if (export_out.empty()) {
                out << payload;
            } else {
                std::ofstream f(export_out);
                if (!f) throw Error("IoError", "cannot open '" + export_out + "' for writing");
                f << payload;
            }
        }
        return 0;
    } catch (const UsageError& e) {
        err << e.name() << ": " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace snake::cli
