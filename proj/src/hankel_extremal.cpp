#include "hankel_extremal.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "specfact.hpp"
#include "workers.hpp"

namespace superopt {

HankelTruncation hankel_truncation(const MatLaurent& phi, int window) {
    HankelTruncation out;
    const int d = std::max(0, -min_degree(phi));
    out.depth = d;
    out.window = window < 0 ? d : window;
    if (d == 0 || out.window == 0) {
        out.block = Mat::Zero(std::max(1, d * phi.rows),
                              std::max(1, out.window * phi.cols));
        return out;
    }
    out.block = Mat::Zero(d * phi.rows, out.window * phi.cols);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < out.window; ++j) {
            auto it = phi.coeffs.find(-(i + j + 1));
            if (it != phi.coeffs.end())
                out.block.block(i * phi.rows, j * phi.cols, phi.rows,
                                phi.cols) = it->second;
        }
    return out;
}

double hankel_norm(const MatLaurent& phi) {
    const HankelTruncation t = hankel_truncation(phi);
    if (t.depth == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(t.block);
    return svd.singularValues()(0);
}

Mat toeplitz_truncation(const MatLaurent& phi, int window) {
    if (window < 1) throw std::invalid_argument("window must be positive");
    Mat out = Mat::Zero(window * phi.rows, window * phi.cols);
    for (int i = 0; i < window; ++i)
        for (int j = 0; j < window; ++j) {
            auto it = phi.coeffs.find(i - j);
            if (it != phi.coeffs.end())
                out.block(i * phi.rows, j * phi.cols, phi.rows, phi.cols) =
                    it->second;
        }
    return out;
}

namespace {

struct NodePowers {
    std::vector<cplx> points;
    // powers[i][j] = zeta_i^j for j in [0, cap]
    std::vector<std::vector<cplx>> powers;
};

NodePowers node_powers(int n, int cap) {
    NodePowers np;
    np.points.resize(n);
    np.powers.assign(n, std::vector<cplx>(static_cast<std::size_t>(cap) + 1));
    for (int i = 0; i < n; ++i) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * i / n);
        np.points[i] = z;
        cplx p = 1.0;
        for (int j = 0; j <= cap; ++j) {
            np.powers[i][static_cast<std::size_t>(j)] = p;
            p *= z;
        }
    }
    return np;
}

}  // namespace

DistResult dist_L2_S1(const MatLaurent& g, int degree_cap, double tol,
                      int max_iter,
                      std::vector<std::pair<int, double>>* trace) {
    if (degree_cap < max_degree(g))
        throw std::invalid_argument("degree cap below the symbol degree");
    const int rows = g.rows, cols = g.cols;
    const int n = std::max({2 * degree_span(g) + 1, 2 * degree_cap + 17, 64});
    const NodePowers np = node_powers(n, degree_cap);

    std::vector<Mat> gv(n);
    for (int i = 0; i < n; ++i) gv[i] = eval(g, np.points[i]);

    std::vector<Mat> F(static_cast<std::size_t>(degree_cap) + 1,
                       Mat::Zero(rows, cols));
    for (const auto& [deg, m] : g.coeffs)
        if (deg >= 0 && deg <= degree_cap) F[static_cast<std::size_t>(deg)] = m;

    auto objective_sq = [&](const std::vector<Mat>& coeffs,
                            std::vector<Mat>* residues,
                            std::vector<double>* nucs) -> double {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            Mat r = gv[i];
            for (int j = 0; j <= degree_cap; ++j)
                r -= np.powers[i][static_cast<std::size_t>(j)] *
                     coeffs[static_cast<std::size_t>(j)];
            Eigen::JacobiSVD<Mat> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const double nuc = svd.singularValues().sum();
            acc += nuc * nuc;
            if (residues) {
                // subgradient direction U V^* restricted to s > 1e-12
                Eigen::Index keep = 0;
                while (keep < svd.singularValues().size() &&
                       svd.singularValues()(keep) > 1e-12)
                    ++keep;
                (*residues)[static_cast<std::size_t>(i)] =
                    svd.matrixU().leftCols(keep) *
                    svd.matrixV().leftCols(keep).adjoint();
                (*nucs)[static_cast<std::size_t>(i)] = nuc;
            }
        }
        return acc / n;
    };

    DistResult out;
    std::vector<Mat> dirs(n);
    std::vector<double> nucs(n);
    double obj = objective_sq(F, &dirs, &nucs);
    if (trace) trace->emplace_back(0, std::sqrt(obj));

    const int patience = 50;
    double anchor = std::sqrt(obj);  // objective at the window start
    int window_start = 0;
    int it = 0;
    bool stalled = false;
    for (it = 1; it <= max_iter; ++it) {
        std::vector<Mat> grad(static_cast<std::size_t>(degree_cap) + 1,
                              Mat::Zero(rows, cols));
        double gnorm = 0.0;
        for (int j = 0; j <= degree_cap; ++j) {
            Mat& gj = grad[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i)
                gj += (2.0 * nucs[static_cast<std::size_t>(i)] / n) *
                      std::conj(np.powers[i][static_cast<std::size_t>(j)]) *
                      dirs[static_cast<std::size_t>(i)];
            gnorm += gj.squaredNorm();
        }
        if (gnorm < 1e-30) {
            stalled = true;
        } else {
            double step = 1.0;
            bool accepted = false;
            while (step > 1e-16) {
                std::vector<Mat> cand = F;
                for (int j = 0; j <= degree_cap; ++j)
                    cand[static_cast<std::size_t>(j)] +=
                        step * grad[static_cast<std::size_t>(j)];
                const double cand_obj = objective_sq(cand, nullptr, nullptr);
                if (cand_obj < obj) {
                    F = std::move(cand);
                    obj = cand_obj;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if (!accepted) stalled = true;
            obj = objective_sq(F, &dirs, &nucs);
        }
        const double j_now = std::sqrt(obj);
        if (trace) trace->emplace_back(it, j_now);
        if (it - window_start >= patience) {
            // relative decrease over the last window
            if (stalled ||
                (anchor - j_now) <= tol * std::max(anchor, 1e-30)) {
                break;
            }
            window_start = it;
            anchor = j_now;
        }
        if (stalled) break;
    }

    out.value = std::sqrt(obj);
    out.iterations = std::min(it, max_iter);
    out.converged = it <= max_iter;
    out.minimizer = make_symbol(rows, cols);
    for (int j = 0; j <= degree_cap; ++j)
        set_coeff(out.minimizer, j, F[static_cast<std::size_t>(j)]);
    return out;
}

ExtremalCandidate make_candidate(const MatLaurent& R, const MatLaurent& Q) {
    ExtremalCandidate c;
    c.R = R;
    c.Q = Q;
    c.product = mul(R, Q);
    const int n = std::max({grid_guard(c.R), grid_guard(c.Q), grid_guard(c.product)});
    c.norm_R = norm_l2_op(R, n);
    c.norm_Q = norm_l2_op(Q, n);
    c.norm_product = norm_l1_op(c.product, n);
    return c;
}

namespace {

// Deterministic Gaussian source: mt19937_64 has a standardized sequence, and
// the Box-Muller transform avoids the implementation-defined distributions.
struct DetRng {
    std::mt19937_64 eng;
    explicit DetRng(std::uint64_t seed) : eng(seed) {}
    double uniform() {
        return static_cast<double>(eng() >> 11) * 0x1.0p-53;
    }
    double gauss() {
        double u1 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    cplx cgauss() {
        const double re = gauss();
        const double im = gauss();
        return {re, im};
    }
};

MatLaurent random_poly(DetRng& rng, int rows, int cols, int lo, int hi) {
    MatLaurent a = make_symbol(rows, cols);
    for (int d = lo; d <= hi; ++d) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
        a.coeffs[d] = m;
    }
    return a;
}

double grid_l2_op(const MatLaurent& a, int n) { return norm_l2_op(a, n); }

}  // namespace

SigmaBounds sigma_lower_search(const MatLaurent& phi, int k,
                               const SearchOptions& opts) {
    const int m = phi.rows, n = phi.cols;
    if (k < 1 || k > std::min(m, n))
        throw std::invalid_argument("rank budget out of range");
    const int cap = std::max(1, opts.degree_cap);
    const int grid_n = std::max({2 * (degree_span(phi) + 2 * cap) + 1, 64,
                                 opts.grid_n});

    struct Best {
        double value = 0.0;
        MatLaurent R, Q;
        bool has = false;
    };
    std::vector<Best> slots(std::max(1, opts.restarts));

    auto run_restart = [&](std::size_t r) {
        DetRng rng(opts.seed + 0x9e3779b97f4a7c15ULL * (r + 1));
        MatLaurent R = random_poly(rng, n, k, 0, cap);
        MatLaurent Q = random_poly(rng, k, m, 1, cap);
        Best& best = slots[r];
        const int iters = std::max(2, opts.iterations);
        for (int it = 0; it < iters; ++it) {
            const bool hilbert_phase = it < iters / 2;
            // ascend in R for fixed Q
            MatLaurent gr = truncate_degrees(
                adjoint_on_circle(mul(Q, phi)), 0, cap);
            if (max_coeff_abs(gr) < 1e-300) return;
            R = scale(gr, 1.0 / (hilbert_phase ? norm_l2_frobenius(gr)
                                               : grid_l2_op(gr, grid_n)));
            // ascend in Q for fixed R
            MatLaurent gq = truncate_degrees(
                adjoint_on_circle(mul(phi, R)), 1, cap);
            if (max_coeff_abs(gq) < 1e-300) return;
            Q = scale(gq, 1.0 / (hilbert_phase ? norm_l2_frobenius(gq)
                                               : grid_l2_op(gq, grid_n)));
            // feasible rescale and exact pairing
            MatLaurent Rf = scale(R, 1.0 / grid_l2_op(R, grid_n));
            MatLaurent Qf = scale(Q, 1.0 / grid_l2_op(Q, grid_n));
            const double value =
                std::abs(pairing(phi, mul(Rf, Qf)).value);
            if (!best.has || value > best.value) {
                best.value = value;
                best.R = Rf;
                best.Q = Qf;
                best.has = true;
            }
        }
    };
    parallel_for(slots.size(), run_restart);

    int winner = -1;
    for (std::size_t r = 0; r < slots.size(); ++r) {
        if (!slots[r].has) continue;
        if (winner < 0 || slots[r].value > slots[static_cast<std::size_t>(winner)].value)
            winner = static_cast<int>(r);
    }

    SigmaBounds out;
    out.k = k;
    out.upper = norm_linf_s1(phi);
    if (winner >= 0) {
        Best& b = slots[static_cast<std::size_t>(winner)];
        ExtremalCandidate cand = make_candidate(b.R, b.Q);
        if (cand.norm_product > 1.0) {
            cand.Q = scale(cand.Q, 1.0 / cand.norm_product);
            cand = make_candidate(cand.R, cand.Q);
        }
        out.lower = std::abs(pairing(phi, cand.product).value);
        out.witness = std::move(cand);
    }

    // Deterministic candidate beside the random ascent: the strictly
    // analytic part of the pointwise adjoint, pushed onto the unit sphere
    // of the mean-operator-norm ball.  For unitary-valued symbols this
    // direction is often the exact maximizer, which the ascent only
    // approaches slowly once the rank budget stops binding.
    const MatLaurent adj = adjoint_on_circle(phi);
    if (max_degree(adj) >= 1) {
        const MatLaurent g = truncate_degrees(adj, 1, max_degree(adj));
        if (!is_zero(g)) {
            const GridSamples gs = sample(g, grid_guard(g, 64));
            const double nu = mixed_norm(gs, 1.0, inf_exponent).value;
            if (nu > 1e-300) {
                const MatLaurent w = scale(g, 1.0 / nu);
                const double val = witness_value(phi, w, k, false);
                if (val > out.lower) {
                    out.lower = val;
                    ExtremalCandidate c;
                    try {
                        c = factor_rank_k(w, k);
                    } catch (const std::exception&) {
                        c.product = w;
                        c.norm_product = mixed_norm(
                            sample(w, grid_guard(w, 64)), 1.0, inf_exponent)
                                             .value;
                    }
                    out.witness = std::move(c);
                }
            }
        }
    }
    return out;
}

double witness_value(const MatLaurent& phi, const MatLaurent& psi, int k,
                     bool strict) {
    auto reject = [&](const char* why) -> double {
        if (strict) throw std::invalid_argument(why);
        return 0.0;
    };
    if (psi.rows != phi.cols || psi.cols != phi.rows)
        return reject("witness shape does not match the symbol");
    if (!membership(psi, Space::H1_0))
        return reject("witness is not strictly analytic (support >= 1)");
    const GridSamples g = sample(psi, grid_guard(psi));
    if (rank_profile(g).essential > k)
        return reject("witness rank exceeds the budget");
    const double nu = mixed_norm(g, 1.0, inf_exponent).value;
    if (nu > 1.0 + 1e-9) return reject("witness norm exceeds the unit ball");
    const double value = std::abs(pairing(phi, psi).value);
    return nu > 1.0 ? value / nu : value;
}

SigmaBounds sigma_bounds(const MatLaurent& phi, int k, const BoundInputs& in) {
    const int m = phi.rows, n = phi.cols;
    if (k < 1 || k > std::min(m, n))
        throw std::invalid_argument("rank budget out of range");

    double upper = norm_linf_s1(phi);
    if (in.t_values) {
        const auto& t = *in.t_values;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 0 || (i > 0 && t[i] > t[i - 1] + 1e-12))
                throw std::invalid_argument(
                    "t values must be nonincreasing and nonnegative");
        }
        double sum = 0.0;
        for (int j = 0; j < k && j < static_cast<int>(t.size()); ++j)
            sum += t[static_cast<std::size_t>(j)];
        upper = std::min(upper, sum);
    }
    if (in.bestapprox_candidate && m == n && k == n) {
        const MatLaurent& f = *in.bestapprox_candidate;
        if (!membership(f, Space::Hinf))
            throw std::invalid_argument("approximant candidate must be analytic");
        upper = std::min(upper, norm_linf_s1(add(phi, scale(f, -1.0))));
    }
    if (k == 1) upper = std::min(upper, hankel_norm(phi));

    SigmaBounds out;
    out.k = k;
    out.upper = upper;
    for (const auto& psi : in.witnesses) {
        const double v = witness_value(phi, psi, k, true);
        if (v > out.lower) {
            out.lower = v;
            ExtremalCandidate c;
            try {
                c = factor_rank_k(psi, k);
            } catch (const std::exception&) {
                // no constructive factorization; keep the product alone
                c.product = psi;
                const GridSamples g = sample(psi, grid_guard(psi));
                c.norm_product = mixed_norm(g, 1.0, inf_exponent).value;
            }
            out.witness = std::move(c);
        }
    }
    const bool collapsed = out.lower >= upper - 1e-9;
    if (in.run_search && !collapsed) {
        SigmaBounds searched = sigma_lower_search(phi, k, in.search);
        if (searched.lower > out.lower) {
            out.lower = searched.lower;
            out.witness = searched.witness;
        }
    }
    if (out.lower > out.upper + 1e-9)
        throw std::runtime_error(
            "certified lower bound exceeds the upper bound");
    out.lower = std::min(out.lower, out.upper);
    return out;
}

namespace {

bool diagonal_support(const MatLaurent& psi) {
    for (const auto& [deg, mm] : psi.coeffs)
        for (int i = 0; i < psi.rows; ++i)
            for (int j = 0; j < psi.cols; ++j)
                if (i != j && std::abs(mm(i, j)) > canon_tol) return false;
    return true;
}

int single_column(const MatLaurent& psi) {
    int col = -1;
    for (const auto& [deg, mm] : psi.coeffs)
        for (int i = 0; i < psi.rows; ++i)
            for (int j = 0; j < psi.cols; ++j)
                if (std::abs(mm(i, j)) > canon_tol) {
                    if (col < 0) col = j;
                    if (col != j) return -1;
                }
    return col;
}

std::vector<double> scalar_modulus_grid(const ScalarLaurent& p, int n) {
    std::vector<double> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)] =
            std::abs(scalar_eval(p, std::polar(1.0, 2.0 * M_PI * i / n)));
    return m;
}

double residual_between(const MatLaurent& a, const MatLaurent& b) {
    return max_coeff_abs(add(a, scale(b, -1.0)));
}

ExtremalCandidate finish_candidate(const MatLaurent& R, const MatLaurent& Q,
                                   const MatLaurent& psi, double tol) {
    ExtremalCandidate c = make_candidate(R, Q);
    if (residual_between(c.product, psi) > tol)
        throw std::runtime_error("factorization residual above tolerance");
    return c;
}

}  // namespace

ExtremalCandidate factor_rank_k(const MatLaurent& psi, int k, double tol) {
    const int n = psi.rows, m = psi.cols;
    if (k < 1) throw std::invalid_argument("rank budget must be positive");
    if (!membership(psi, Space::H1_0))
        throw std::invalid_argument("symbol must vanish at 0 and be analytic");
    const GridSamples g = sample(psi, grid_guard(psi, 64));
    const RankProfile rp = rank_profile(g);
    if (rp.essential > k)
        throw std::invalid_argument("essential rank exceeds the budget");

    const int cap = std::max(4 * std::max(1, degree_span(psi)), 96);

    if (diagonal_support(psi)) {
        MatLaurent R = make_symbol(n, k);
        MatLaurent Q = make_symbol(k, m);
        int slot = 0;
        for (int i = 0; i < std::min(n, m); ++i) {
            ScalarLaurent p;
            for (const auto& [deg, mm] : psi.coeffs)
                if (std::abs(mm(i, i)) > canon_tol) p.coeffs.emplace(deg, mm(i, i));
            if (scalar_is_zero(p)) continue;
            if (slot >= k)
                throw std::invalid_argument("essential rank exceeds the budget");
            const int gn = std::max(2 * scalar_span(p) + 1, 128);
            std::vector<double> mod = scalar_modulus_grid(p, gn);
            const double mmax = *std::max_element(mod.begin(), mod.end());
            const double mmin = *std::min_element(mod.begin(), mod.end());
            if (mmin < 1e-9 * std::max(mmax, 1.0))
                throw std::invalid_argument(
                    "diagonal entry vanishes on the circle: unsupported");
            for (double& v : mod) v = std::sqrt(v);
            const OuterFactor hf = outer_from_modulus(mod, cap);
            const ScalarLaurent h2 = scalar_mul(hf.h, hf.h);
            const ScalarLaurent theta = scalar_mul(
                scalar_shift(p, -1), series_inverse(h2, cap));
            const ScalarLaurent r_entry = scalar_mul(hf.h, theta);
            for (const auto& [deg, c] : r_entry.coeffs) {
                if (deg < 0 || deg > cap) continue;
                Mat mm = Mat::Zero(n, k);
                mm(i, slot) = c;
                add_coeff(R, deg, mm);
            }
            const ScalarLaurent q_entry = scalar_shift(hf.h, 1);
            for (const auto& [deg, c] : q_entry.coeffs) {
                Mat mm = Mat::Zero(k, m);
                mm(slot, i) = c;
                add_coeff(Q, deg, mm);
            }
            ++slot;
        }
        return finish_candidate(R, Q, psi, tol);
    }

    const int col = single_column(psi);
    if (col >= 0) {
        // column vector c with psi = c e_col^T; split through a scalar outer
        MatLaurent cvec = make_symbol(n, 1);
        for (const auto& [deg, mm] : psi.coeffs) {
            Mat v = Mat::Zero(n, 1);
            for (int i = 0; i < n; ++i) v(i, 0) = mm(i, col);
            add_coeff(cvec, deg, v);
        }
        MatLaurent shifted = shift(cvec, -1);
        const int gn = std::max(2 * degree_span(shifted) + 1, 128);
        std::vector<double> mod(static_cast<std::size_t>(gn));
        for (int i = 0; i < gn; ++i)
            mod[static_cast<std::size_t>(i)] =
                eval(shifted, std::polar(1.0, 2.0 * M_PI * i / gn)).norm();
        const double mmax = *std::max_element(mod.begin(), mod.end());
        const double mmin = *std::min_element(mod.begin(), mod.end());
        if (mmin < 1e-9 * std::max(mmax, 1.0))
            throw std::invalid_argument(
                "column norm vanishes on the circle: unsupported");
        for (double& v : mod) v = std::sqrt(v);
        const OuterFactor gf = outer_from_modulus(mod, cap);
        MatLaurent R = make_symbol(n, k);
        const MatLaurent rcol = truncate_degrees(
            mul_scalar(series_inverse(gf.h, cap), shifted), 0, cap);
        for (const auto& [deg, mm] : rcol.coeffs) {
            Mat v = Mat::Zero(n, k);
            for (int i = 0; i < n; ++i) v(i, 0) = mm(i, 0);
            add_coeff(R, deg, v);
        }
        MatLaurent Q = make_symbol(k, m);
        for (const auto& [deg, c] : scalar_shift(gf.h, 1).coeffs) {
            Mat v = Mat::Zero(k, m);
            v(0, col) = c;
            add_coeff(Q, deg, v);
        }
        return finish_candidate(R, Q, psi, tol);
    }

    if (n == m && k == n) {
        std::vector<double> mod(g.svals.size());
        for (std::size_t i = 0; i < g.svals.size(); ++i) mod[i] = g.svals[i](0);
        const double mmax = *std::max_element(mod.begin(), mod.end());
        const double mmin = *std::min_element(mod.begin(), mod.end());
        if (mmin < 1e-9 * std::max(mmax, 1.0))
            throw std::invalid_argument(
                "pointwise norm vanishes on the circle: unsupported");
        for (double& v : mod) v = std::sqrt(v);
        const OuterFactor hf = outer_from_modulus(mod, cap);
        const ScalarLaurent h2 = scalar_mul(hf.h, hf.h);
        const MatLaurent theta = truncate_degrees(
            mul_scalar(series_inverse(h2, cap), shift(psi, -1)), 0, cap);
        if (!is_inner(theta, std::max(tol, 1e-8)))
            throw std::invalid_argument(
                "symbol is not inner-times-outer-squared: unsupported");
        const MatLaurent R = truncate_degrees(mul_scalar(hf.h, theta), 0, cap);
        MatLaurent Q = mul_scalar(scalar_shift(hf.h, 1), identity_symbol(n));
        return finish_candidate(R, Q, psi, tol);
    }

    throw std::invalid_argument(
        "unsupported structure for constructive factorization");
}

}  // namespace superopt
