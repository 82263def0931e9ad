#include "superopt.h"

#include "certify.hpp"
#include "hankel_extremal.hpp"
#include "json_io.hpp"
#include "specfact.hpp"
#include "trigpoly.hpp"
#include "zoo.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <stdexcept>
#include <string>

struct superopt_symbol {
    superopt::MatLaurent value;
};

struct superopt_report {
    superopt::CertReport value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
superopt_status guarded(F&& f) {
    try {
        f();
        g_last_error.clear();
        return SUPEROPT_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return g_last_error.find("unsupported") != std::string::npos
                   ? SUPEROPT_ERR_UNSUPPORTED
                   : SUPEROPT_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return SUPEROPT_ERR_NUMERIC;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        return SUPEROPT_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return SUPEROPT_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SUPEROPT_ERR_INTERNAL;
    }
}

superopt_status require(bool cond, const char* msg) {
    if (cond) return SUPEROPT_OK;
    g_last_error = msg;
    return SUPEROPT_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* superopt_version(void) { return "1.0.0"; }

const char* superopt_last_error(void) { return g_last_error.c_str(); }

void superopt_string_free(char* s) { std::free(s); }

superopt_status superopt_symbol_from_json(const char* text,
                                          superopt_symbol** out) {
    if (superopt_status s = require(text && out, "null argument")) return s;
    *out = nullptr;
    const superopt_status st = guarded([&] {
        auto sym = std::make_unique<superopt_symbol>();
        sym->value = superopt::symbol_from_json(text);
        *out = sym.release();
    });
    return st == SUPEROPT_ERR_INVALID_ARGUMENT ? SUPEROPT_ERR_PARSE : st;
}

superopt_status superopt_symbol_to_json(const superopt_symbol* sym, int indent,
                                        char** out) {
    if (superopt_status s = require(sym && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(superopt::symbol_to_json(sym->value, indent)); });
}

superopt_status superopt_symbol_shape(const superopt_symbol* sym, int* rows,
                                      int* cols, int* min_deg, int* max_deg) {
    if (superopt_status s = require(sym != nullptr, "null argument")) return s;
    if (rows) *rows = sym->value.rows;
    if (cols) *cols = sym->value.cols;
    if (min_deg) *min_deg = superopt::min_degree(sym->value);
    if (max_deg) *max_deg = superopt::max_degree(sym->value);
    return SUPEROPT_OK;
}

void superopt_symbol_free(superopt_symbol* sym) { delete sym; }

superopt_status superopt_hankel_norm(const superopt_symbol* sym, double* out) {
    if (superopt_status s = require(sym && out, "null argument")) return s;
    return guarded([&] { *out = superopt::hankel_norm(sym->value); });
}

superopt_status superopt_hankel_depth(const superopt_symbol* sym, int* out) {
    if (superopt_status s = require(sym && out, "null argument")) return s;
    return guarded([&] { *out = superopt::hankel_truncation(sym->value).depth; });
}

superopt_status superopt_pairing(const superopt_symbol* phi,
                                 const superopt_symbol* psi, double* re,
                                 double* im) {
    if (superopt_status s = require(phi && psi, "null argument")) return s;
    return guarded([&] {
        const superopt::PairingValue v = superopt::pairing(phi->value, psi->value);
        if (re) *re = v.value.real();
        if (im) *im = v.value.imag();
    });
}

superopt_status superopt_det_winding(const superopt_symbol* sym, int* winding) {
    if (superopt_status s = require(sym && winding, "null argument")) return s;
    return guarded([&] {
        *winding = superopt::winding_number(
            superopt::det_on_circle(sym->value), 64);
    });
}

void superopt_sigma_options_init(superopt_sigma_options* opts) {
    if (!opts) return;
    opts->degree_cap = 8;
    opts->restarts = 8;
    opts->seed = 0;
    opts->iterations = 80;
    opts->grid_n = 0;
    opts->run_search = 1;
    opts->tol = 1e-9;
}

superopt_status superopt_sigma_bounds(const superopt_symbol* phi, int k,
                                      const superopt_sigma_options* opts,
                                      double* lower, double* upper,
                                      superopt_symbol** witness_out) {
    if (superopt_status s = require(phi && lower && upper, "null argument"))
        return s;
    if (witness_out) *witness_out = nullptr;
    return guarded([&] {
        superopt::BoundInputs in;
        if (opts) {
            in.run_search = opts->run_search != 0;
            in.search.degree_cap = opts->degree_cap;
            in.search.restarts = opts->restarts;
            in.search.seed = opts->seed;
            in.search.iterations = opts->iterations;
            in.search.grid_n = opts->grid_n;
        }
        const superopt::SigmaBounds sb =
            superopt::sigma_bounds(phi->value, k, in);
        *lower = sb.lower;
        *upper = sb.upper;
        if (witness_out && sb.witness) {
            auto sym = std::make_unique<superopt_symbol>();
            sym->value = sb.witness->product;
            *witness_out = sym.release();
        }
    });
}

superopt_status superopt_dist_l2_s1(const superopt_symbol* g, int degree_cap,
                                    double tol, int max_iter, double* value,
                                    int* iterations, int* converged) {
    if (superopt_status s = require(g && value, "null argument")) return s;
    return guarded([&] {
        const superopt::DistResult r =
            superopt::dist_L2_S1(g->value, degree_cap, tol, max_iter);
        *value = r.value;
        if (iterations) *iterations = r.iterations;
        if (converged) *converged = r.converged ? 1 : 0;
    });
}

superopt_status superopt_zoo_list(char** json_out) {
    if (superopt_status s = require(json_out != nullptr, "null argument"))
        return s;
    return guarded([&] {
        nlohmann::json arr = nlohmann::json::array();
        for (const std::string& name : superopt::zoo_names()) {
            const superopt::ZooEntry e = superopt::zoo_entry(name);
            arr.push_back({{"name", e.name}, {"summary", e.summary}});
        }
        *json_out = dup_string(arr.dump(2));
    });
}

superopt_status superopt_zoo_emit(const char* name, superopt_symbol** out) {
    if (superopt_status s = require(name && out, "null argument")) return s;
    return guarded([&] {
        auto sym = std::make_unique<superopt_symbol>();
        sym->value = superopt::zoo_entry(name).phi;
        *out = sym.release();
    });
}

superopt_status superopt_zoo_verify(const char* name, double tol,
                                    superopt_report** out) {
    if (superopt_status s = require(out != nullptr, "null argument")) return s;
    return guarded([&] {
        auto rep = std::make_unique<superopt_report>();
        if (!name || std::strcmp(name, "all") == 0)
            rep->value = superopt::verify_all(tol);
        else
            rep->value = superopt::verify_entry(superopt::zoo_entry(name), tol);
        *out = rep.release();
    });
}

superopt_status superopt_report_to_json(const superopt_report* rep, int indent,
                                        char** out) {
    if (superopt_status s = require(rep && out, "null argument")) return s;
    return guarded([&] { *out = dup_string(superopt::report_to_json(rep->value, indent)); });
}

superopt_status superopt_report_table(const superopt_report* rep, char** out) {
    if (superopt_status s = require(rep && out, "null argument")) return s;
    return guarded([&] {
        std::ostringstream os;
        std::size_t idw = 5, anw = 6;
        for (const superopt::CertCheck& c : rep->value.checks) {
            idw = std::max(idw, c.id.size());
            anw = std::max(anw, c.anchor.size());
        }
        idw = std::min<std::size_t>(idw, 44);
        anw = std::min<std::size_t>(anw, 52);
        auto pad = [](const std::string& s, std::size_t w) {
            std::string t = s.size() > w ? s.substr(0, w - 1) + "~" : s;
            t.resize(w, ' ');
            return t;
        };
        os << pad("check", idw) << "  " << pad("anchor", anw)
           << "  verdict       measured\n";
        for (const superopt::CertCheck& c : rep->value.checks) {
            std::ostringstream ms;
            ms.precision(10);
            for (std::size_t i = 0; i < c.measured.size(); ++i) {
                if (i) ms << ", ";
                ms << c.measured[i];
            }
            if (!c.note.empty()) {
                if (!c.measured.empty()) ms << "  ";
                ms << "(" << c.note << ")";
            }
            os << pad(c.id, idw) << "  " << pad(c.anchor, anw) << "  "
               << pad(superopt::verdict_name(c.verdict), 12) << "  "
               << ms.str() << "\n";
        }
        os << "overall: " << superopt::verdict_name(rep->value.overall())
           << "\n";
        *out = dup_string(os.str());
    });
}

int superopt_report_overall(const superopt_report* rep) {
    if (!rep) return -1;
    switch (rep->value.overall()) {
        case superopt::Verdict::pass: return 0;
        case superopt::Verdict::fail: return 1;
        case superopt::Verdict::inconclusive: return 2;
    }
    return -1;
}

void superopt_report_free(superopt_report* rep) { delete rep; }

}  // extern "C"
