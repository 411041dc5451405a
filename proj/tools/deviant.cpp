// deviant — deviations, Betti tables, and Koszul homology of edge ideals.
//
// Exit codes: 0 success, 1 theorem violation (failed verify / extraction),
// 2 usage error, 3 resource bound exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "deviant/betti.hpp"
#include "deviant/deviations.hpp"
#include "deviant/dgmodel.hpp"
#include "deviant/errors.hpp"
#include "deviant/ideals.hpp"
#include "deviant/io.hpp"
#include "deviant/koszul.hpp"
#include "deviant/verify.hpp"

namespace {

using namespace deviant;

struct Options {
    int path = 0, cycle = 0;
    std::string edges;
    int smax = 0;
    int gamma_alpha_smax = 0;
    int cap = 0;
    int degree_bound = 0;
    std::string engine = "jacques";
    long long chr = 0;
    std::string format = "json";
    std::string out;
    bool quick = false, full = false;
    int jobs = 1;
};

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// recognize path/cycle edge sets read from a file, so the closed-form
// commands work on them
Graph detect_kind(Graph g) {
    if (g.n >= 2 && g.edges == path_graph(g.n).edges) g.kind = GraphKind::path;
    else if (g.n >= 3 && g.edges == cycle_graph(g.n).edges) g.kind = GraphKind::cycle;
    return g;
}

Graph resolve_graph(const Options& o, bool allow_general) {
    int given = (o.path > 0) + (o.cycle > 0) + !o.edges.empty();
    if (given != 1)
        throw std::invalid_argument("exactly one of --path, --cycle, --edges is required");
    Graph g = o.path > 0   ? path_graph(o.path)
              : o.cycle > 0 ? cycle_graph(o.cycle)
                            : detect_kind(read_edge_list_file(o.edges));
    if (!allow_general && g.kind == GraphKind::general)
        throw std::invalid_argument("this command needs a path or a cycle");
    return g;
}

void require_char(const Options& o) {
    if (o.chr != 0 && !is_prime(o.chr))
        throw std::invalid_argument("--char must be 0 or a prime");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + o.out);
    f << text;
}

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::path: return "path";
        case GraphKind::cycle: return "cycle";
        default: return "general";
    }
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

int cmd_deviations(const Options& o) {
    if (o.gamma_alpha_smax > 0) {
        SequencePair ga = gamma_alpha(o.gamma_alpha_smax);
        if (o.format == "json") {
            Json j;
            j["command"] = "deviations";
            j["mode"] = "gamma-alpha";
            j["smax"] = ga.smax;
            Json rows = Json::array();
            for (int s = 1; s <= ga.smax; ++s) {
                Json row;
                row["s"] = s;
                row["gamma"] = json_int(ga.gamma.at(s));
                row["alpha"] = json_int(ga.alpha.at(s));
                rows.push_back(std::move(row));
            }
            j["rows"] = std::move(rows);
            emit(o, j.dump(2) + "\n");
        } else {
            std::string sep = o.format == "csv" ? "," : "\t";
            std::string text = "s" + sep + "gamma" + sep + "alpha\n";
            for (int s = 1; s <= ga.smax; ++s)
                text += std::to_string(s) + sep + ga.gamma.at(s).str() + sep +
                        ga.alpha.at(s).str() + "\n";
            emit(o, text);
        }
        return 0;
    }

    Graph g = resolve_graph(o, true);
    if (o.cap > 0) {
        int db = o.degree_bound > 0 ? o.degree_bound : o.cap * g.n;
        DeviationTable t = deviations_multigraded(g, constant_vector(g.n, o.cap), db);
        if (o.format == "json") {
            Json j;
            j["command"] = "deviations";
            j["kind"] = kind_name(g.kind);
            j["n"] = g.n;
            j["cap"] = json_vector(t.cap);
            j["degree_bound"] = t.degree_bound;
            j["rows"] = multigraded_rows(t);
            emit(o, j.dump(2) + "\n");
        } else if (o.format == "csv") {
            std::string text = "v,epsilon\n";
            for (const auto& [v, e] : t.multigraded)
                text += csv_quote(v.str()) + "," + e.str() + "\n";
            emit(o, text);
        } else {
            emit(o, multigraded_text(t));
        }
        return 0;
    }

    int smax = o.smax > 0 ? o.smax : g.n;
    DeviationTable t = deviations_graded(g, smax);
    if (o.format == "json") {
        Json j;
        j["command"] = "deviations";
        j["kind"] = kind_name(g.kind);
        j["n"] = g.n;
        j["smax"] = t.smax;
        j["rows"] = deviations_rows(t);
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = "s,epsilon\n";
        for (const auto& [s, e] : t.graded)
            text += std::to_string(s) + "," + e.str() + "\n";
        emit(o, text);
    } else {
        emit(o, deviations_text(t));
    }
    return 0;
}

BettiTable run_engine(const Options& o, const Graph& g) {
    if (o.engine == "jacques") {
        if (g.kind == GraphKind::general)
            throw std::invalid_argument("engine jacques needs a path or a cycle");
        return betti_table(g);
    }
    if (o.engine == "koszul")
        return koszul_homology(edge_ideal(g), ones(g.n), o.chr);
    if (o.engine == "model") {
        if (g.kind == GraphKind::general)
            throw std::invalid_argument("engine model needs a path or a cycle");
        return model_homology(g.kind, g.n, ones(g.n), o.chr);
    }
    throw std::invalid_argument("unknown engine " + o.engine);
}

int cmd_betti(const Options& o, bool allow_general) {
    require_char(o);
    Graph g = resolve_graph(o, allow_general);
    BettiTable t = run_engine(o, g);
    if (o.format == "json") {
        Json j;
        j["command"] = allow_general ? "homology" : "betti";
        j["kind"] = kind_name(g.kind);
        j["n"] = g.n;
        j["engine"] = o.engine;
        j["char"] = o.chr;
        j["rows"] = betti_rows(t);
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        emit(o, betti_csv(t));
    } else {
        emit(o, betti_text(t));
    }
    return 0;
}

int cmd_generators(const Options& o) {
    require_char(o);
    Graph g = resolve_graph(o, false);
    auto gens = koszul_minimal_generators(edge_ideal(g), ones(g.n), o.chr);
    if (o.format == "json") {
        Json j;
        j["command"] = "generators";
        j["kind"] = kind_name(g.kind);
        j["n"] = g.n;
        j["char"] = o.chr;
        Json rows = Json::array();
        for (auto [i, jdeg] : gens) {
            Json row;
            row["i"] = i;
            row["j"] = jdeg;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = "i,j\n";
        for (auto [i, jdeg] : gens)
            text += std::to_string(i) + "," + std::to_string(jdeg) + "\n";
        emit(o, text);
    } else {
        std::string text;
        for (auto [i, jdeg] : gens) {
            if (!text.empty()) text += " ";
            text += "(" + std::to_string(i) + "," + std::to_string(jdeg) + ")";
        }
        emit(o, text + "\n");
    }
    return 0;
}

int cmd_verify(const Options& o) {
    require_char(o);
    if (o.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
    VerifyOptions vo;
    vo.full = o.full;
    vo.prime = o.chr;
    vo.jobs = o.jobs;
    std::vector<CheckResult> rs = run_acceptance(vo);
    if (o.format == "json") {
        Json j;
        j["command"] = "verify";
        j["mode"] = vo.full ? "full" : "quick";
        j["char"] = o.chr;
        Json rows = Json::array();
        for (const CheckResult& r : rs) {
            Json row;
            row["id"] = r.id;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["warn"] = r.warn;
            row["gating"] = r.gating;
            row["details"] = r.details;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        j["pass"] = acceptance_ok(rs);
        emit(o, j.dump(2) + "\n");
    } else if (o.format == "csv") {
        std::string text = "id,name,pass,warn,gating,details\n";
        for (const CheckResult& r : rs)
            text += r.id + "," + csv_quote(r.name) + "," + (r.pass ? "1" : "0") + "," +
                    (r.warn ? "1" : "0") + "," + (r.gating ? "1" : "0") + "," +
                    csv_quote(r.details) + "\n";
        emit(o, text);
    } else {
        emit(o, format_report(rs));
    }
    return acceptance_ok(rs) ? 0 : 1;
}

void add_graph_flags(CLI::App* cmd, Options& o, bool with_edges) {
    cmd->add_option("--path", o.path, "path graph P_n on n vertices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cycle", o.cycle, "cycle graph C_n on n vertices")
        ->check(CLI::PositiveNumber);
    if (with_edges)
        cmd->add_option("--edges", o.edges, "edge-list file: `n` header, then `i j` lines");
}

void add_output_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    cmd->add_option("--out", o.out, "write to file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deviations, Betti tables, and Koszul homology of edge ideals"};
    app.require_subcommand(1);
    Options o;

    CLI::App* dev = app.add_subcommand("deviations", "graded or multigraded deviations");
    add_graph_flags(dev, o, true);
    dev->add_option("--smax", o.smax, "graded deviations up to s (default n)");
    dev->add_option("--gamma-alpha", o.gamma_alpha_smax,
                    "emit the (gamma_s, alpha_s) table up to s")
        ->check(CLI::Range(1, 25));
    dev->add_option("--cap", o.cap, "multigraded mode: componentwise cap");
    dev->add_option("--degree-bound", o.degree_bound,
                    "multigraded truncation (default cap*n)");
    add_output_flags(dev, o);

    CLI::App* bet = app.add_subcommand("betti", "Betti table of S/I(G), path or cycle");
    add_graph_flags(bet, o, true);
    bet->add_option("--engine", o.engine, "jacques | koszul | model (default jacques)")
        ->check(CLI::IsMember({"jacques", "koszul", "model"}));
    bet->add_option("--char", o.chr, "field characteristic (0 = rationals)");
    add_output_flags(bet, o);

    CLI::App* hom = app.add_subcommand("homology",
                                       "Koszul homology table, any edge ideal");
    add_graph_flags(hom, o, true);
    hom->add_option("--engine", o.engine, "koszul | model | jacques (default koszul)");
    hom->add_option("--char", o.chr, "field characteristic (0 = rationals)");
    add_output_flags(hom, o);

    CLI::App* gen = app.add_subcommand("generators",
                                       "minimal generator bidegrees of the homology algebra");
    add_graph_flags(gen, o, true);
    gen->add_option("--char", o.chr, "field characteristic (0 = rationals)");
    add_output_flags(gen, o);

    CLI::App* ver = app.add_subcommand("verify", "run the acceptance suite");
    ver->add_flag("--quick", o.quick, "reduced bounds, n <= 6 (default)");
    ver->add_flag("--full", o.full, "full bounds: n <= 8, Table 1 to s = 25");
    ver->add_option("--char", o.chr, "also check over F_p");
    ver->add_option("--jobs", o.jobs, "worker threads for independent sweeps");
    add_output_flags(ver, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(dev)) return cmd_deviations(o);
        if (app.got_subcommand(bet)) return cmd_betti(o, false);
        if (app.got_subcommand(hom)) {
            if (!hom->count("--engine")) o.engine = "koszul";
            return cmd_betti(o, true);
        }
        if (app.got_subcommand(gen)) return cmd_generators(o);
        if (app.got_subcommand(ver)) return cmd_verify(o);
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const ExtractionError& e) {
        std::cerr << "extraction failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
