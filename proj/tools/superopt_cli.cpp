// Command-line front end.  Talks to the library exclusively through the C
// interface in superopt.h; all numerics live behind that wall.
//
// Exit codes: 0 success (inconclusive checks do not fail), 1 at least one
// verification check failed, 2 usage / I-O / malformed input.

#include "superopt.h"

#include "CLI11.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace {

int report_error() {
    std::fprintf(stderr, "error: %s\n", superopt_last_error());
    return 2;
}

// "-" means standard input.
bool read_input(const std::string& path, std::string& out) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        out = ss.str();
        return true;
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        return false;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    out = ss.str();
    return true;
}

bool write_output(const std::string& path, const char* text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
        return false;
    }
    std::string t(text);
    f << t;
    if (t.empty() || t.back() != '\n') f << '\n';
    return f.good();
}

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { superopt_string_free(s); }
};

struct SymbolGuard {
    superopt_symbol* sym = nullptr;
    ~SymbolGuard() { superopt_symbol_free(sym); }
};

struct ReportGuard {
    superopt_report* rep = nullptr;
    ~ReportGuard() { superopt_report_free(rep); }
};

int load_symbol(const std::string& path, SymbolGuard& g) {
    std::string text;
    if (!read_input(path, text)) return 2;
    if (superopt_symbol_from_json(text.c_str(), &g.sym) != SUPEROPT_OK)
        return report_error();
    return 0;
}

int cmd_verify(const std::string& name, double tol, const std::string& out) {
    ReportGuard rep;
    const char* arg = (name.empty() || name == "all") ? nullptr : name.c_str();
    if (superopt_zoo_verify(arg, tol, &rep.rep) != SUPEROPT_OK)
        return report_error();

    StringGuard table;
    if (superopt_report_table(rep.rep, &table.s) != SUPEROPT_OK)
        return report_error();
    std::fputs(table.s, stdout);

    if (!out.empty()) {
        StringGuard js;
        if (superopt_report_to_json(rep.rep, 2, &js.s) != SUPEROPT_OK)
            return report_error();
        if (!write_output(out, js.s)) return 2;
    }
    return superopt_report_overall(rep.rep) == 1 ? 1 : 0;
}

int cmd_sigma(const std::string& input, int k, const superopt_sigma_options& opts,
              const std::string& out, const std::string& witness_out) {
    SymbolGuard phi;
    if (int rc = load_symbol(input, phi)) return rc;

    double lower = 0.0, upper = 0.0;
    superopt_symbol* wit_raw = nullptr;
    if (superopt_sigma_bounds(phi.sym, k, &opts, &lower, &upper, &wit_raw) !=
        SUPEROPT_OK)
        return report_error();
    SymbolGuard wit;
    wit.sym = wit_raw;

    std::printf("k: %d\n", k);
    std::printf("lower: %.17g\n", lower);
    std::printf("upper: %.17g\n", upper);
    if (wit.sym) {
        int r = 0, c = 0, lo = 0, hi = 0;
        superopt_symbol_shape(wit.sym, &r, &c, &lo, &hi);
        std::printf("witness: %dx%d, degrees [%d, %d]\n", r, c, lo, hi);
    } else {
        std::printf("witness: none\n");
    }

    if (!out.empty()) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "{\n  \"k\": %d,\n  \"lower\": %.17g,\n  \"upper\": "
                      "%.17g,\n  \"witness_recorded\": %s\n}",
                      k, lower, upper, wit.sym ? "true" : "false");
        if (!write_output(out, buf)) return 2;
    }
    if (!witness_out.empty()) {
        if (!wit.sym) {
            std::fprintf(stderr, "note: no witness available to write\n");
        } else {
            StringGuard js;
            if (superopt_symbol_to_json(wit.sym, 2, &js.s) != SUPEROPT_OK)
                return report_error();
            if (!write_output(witness_out, js.s)) return 2;
        }
    }
    return 0;
}

int cmd_hankel(const std::string& input) {
    SymbolGuard sym;
    if (int rc = load_symbol(input, sym)) return rc;

    double norm = 0.0;
    if (superopt_hankel_norm(sym.sym, &norm) != SUPEROPT_OK)
        return report_error();
    int depth = 0;
    if (superopt_hankel_depth(sym.sym, &depth) != SUPEROPT_OK)
        return report_error();
    std::printf("hankel norm: %.17g\n", norm);
    std::printf("negative-degree depth: %d\n", depth);

    int rows = 0, cols = 0, lo = 0, hi = 0;
    superopt_symbol_shape(sym.sym, &rows, &cols, &lo, &hi);
    if (rows == cols) {
        int winding = 0;
        if (superopt_det_winding(sym.sym, &winding) == SUPEROPT_OK) {
            std::printf("det winding: %d\n", winding);
            std::printf("index: %d\n", -winding);
        } else {
            std::printf("det winding: skipped (%s)\n", superopt_last_error());
        }
    }
    return 0;
}

int cmd_zoo_list() {
    StringGuard js;
    if (superopt_zoo_list(&js.s) != SUPEROPT_OK) return report_error();
    std::puts(js.s);
    return 0;
}

int cmd_zoo_emit(const std::string& name, const std::string& out) {
    SymbolGuard sym;
    if (superopt_zoo_emit(name.c_str(), &sym.sym) != SUPEROPT_OK)
        return report_error();
    StringGuard js;
    if (superopt_symbol_to_json(sym.sym, 2, &js.s) != SUPEROPT_OK)
        return report_error();
    if (out.empty()) {
        std::puts(js.s);
        return 0;
    }
    return write_output(out, js.s) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superoptimal approximation toolkit"};
    app.set_version_flag("--version", std::string(superopt_version()));
    app.require_subcommand(1);

    // verify
    std::string v_name = "all";
    double v_tol = 1e-9;
    std::string v_out;
    auto* verify =
        app.add_subcommand("verify", "re-check the recorded claims of the registry");
    verify->add_option("name", v_name, "registry entry, or 'all'");
    verify->add_option("--tol", v_tol, "check tolerance");
    verify->add_option("--out", v_out, "write the JSON report here");

    // sigma
    std::string s_input;
    int s_k = 1;
    superopt_sigma_options s_opts;
    superopt_sigma_options_init(&s_opts);
    bool s_nosearch = false;
    std::string s_out, s_witness_out;
    auto* sigma = app.add_subcommand(
        "sigma", "lower/upper bounds for the rank-k trace pairing value");
    sigma->add_option("input", s_input, "symbol JSON path, or '-' for stdin")
        ->required();
    sigma->add_option("--k", s_k, "pairing rank")->required();
    sigma->add_option("--degree-cap", s_opts.degree_cap, "witness degree cap");
    sigma->add_option("--grid", s_opts.grid_n, "minimum evaluation grid size");
    sigma->add_option("--restarts", s_opts.restarts, "search restarts");
    sigma->add_option("--seed", s_opts.seed, "search seed");
    sigma->add_option("--iterations", s_opts.iterations, "ascent steps per restart");
    sigma->add_option("--tol", s_opts.tol, "report tolerance");
    sigma->add_flag("--no-search", s_nosearch, "skip the ascent search");
    sigma->add_option("--out", s_out, "write the bound summary JSON here");
    sigma->add_option("--witness-out", s_witness_out,
                      "write the witness symbol JSON here");

    // hankel
    std::string h_input;
    auto* hankel = app.add_subcommand(
        "hankel", "Hankel norm, depth, and determinant winding of a symbol");
    hankel->add_option("input", h_input, "symbol JSON path, or '-' for stdin")
        ->required();

    // zoo
    auto* zoo = app.add_subcommand("zoo", "named example registry");
    zoo->require_subcommand(1);
    auto* zlist = zoo->add_subcommand("list", "list registry entries");
    std::string e_name, e_out;
    auto* zemit = zoo->add_subcommand("emit", "print a registry symbol as JSON");
    zemit->add_option("name", e_name, "registry entry")->required();
    zemit->add_option("--out", e_out, "write the symbol JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*verify) return cmd_verify(v_name, v_tol, v_out);
    if (*sigma) {
        s_opts.run_search = s_nosearch ? 0 : 1;
        return cmd_sigma(s_input, s_k, s_opts, s_out, s_witness_out);
    }
    if (*hankel) return cmd_hankel(h_input);
    if (*zlist) return cmd_zoo_list();
    if (*zemit) return cmd_zoo_emit(e_name, e_out);
    return 2;
}
