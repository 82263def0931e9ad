#include "specfact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace superopt {

namespace {

bool negligible(cplx c) { return std::abs(c) < canon_tol; }

}  // namespace

ScalarLaurent scalar_constant(cplx c) {
    ScalarLaurent a;
    if (!negligible(c)) a.coeffs[0] = c;
    return a;
}

ScalarLaurent scalar_monomial(int deg, cplx c) {
    ScalarLaurent a;
    if (!negligible(c)) a.coeffs[deg] = c;
    return a;
}

void scalar_set(ScalarLaurent& a, int deg, cplx c) {
    if (negligible(c))
        a.coeffs.erase(deg);
    else
        a.coeffs[deg] = c;
}

cplx scalar_coeff(const ScalarLaurent& a, int deg) {
    auto it = a.coeffs.find(deg);
    return it == a.coeffs.end() ? cplx(0.0) : it->second;
}

void scalar_canonicalize(ScalarLaurent& a) {
    for (auto it = a.coeffs.begin(); it != a.coeffs.end();) {
        if (negligible(it->second))
            it = a.coeffs.erase(it);
        else
            ++it;
    }
}

bool scalar_is_zero(const ScalarLaurent& a) { return a.coeffs.empty(); }

int scalar_min_degree(const ScalarLaurent& a) {
    return a.coeffs.empty() ? 0 : a.coeffs.begin()->first;
}

int scalar_max_degree(const ScalarLaurent& a) {
    return a.coeffs.empty() ? 0 : a.coeffs.rbegin()->first;
}

int scalar_span(const ScalarLaurent& a) {
    return a.coeffs.empty() ? 0 : scalar_max_degree(a) - scalar_min_degree(a);
}

cplx scalar_eval(const ScalarLaurent& a, cplx z) {
    cplx v = 0.0;
    for (const auto& [deg, c] : a.coeffs) v += std::pow(z, deg) * c;
    return v;
}

ScalarLaurent scalar_add(const ScalarLaurent& a, const ScalarLaurent& b) {
    ScalarLaurent out = a;
    for (const auto& [deg, c] : b.coeffs) {
        auto it = out.coeffs.find(deg);
        if (it == out.coeffs.end())
            out.coeffs.emplace(deg, c);
        else
            it->second += c;
    }
    scalar_canonicalize(out);
    return out;
}

ScalarLaurent scalar_scale(const ScalarLaurent& a, cplx s) {
    ScalarLaurent out;
    for (const auto& [deg, c] : a.coeffs) {
        const cplx sc = s * c;
        if (!negligible(sc)) out.coeffs.emplace(deg, sc);
    }
    return out;
}

ScalarLaurent scalar_mul(const ScalarLaurent& a, const ScalarLaurent& b) {
    ScalarLaurent out;
    for (const auto& [da, ca] : a.coeffs)
        for (const auto& [db, cb] : b.coeffs) out.coeffs[da + db] += ca * cb;
    scalar_canonicalize(out);
    return out;
}

ScalarLaurent scalar_shift(const ScalarLaurent& a, int k) {
    ScalarLaurent out;
    for (const auto& [deg, c] : a.coeffs) out.coeffs.emplace(deg + k, c);
    return out;
}

ScalarLaurent scalar_conj_on_circle(const ScalarLaurent& a) {
    ScalarLaurent out;
    for (const auto& [deg, c] : a.coeffs)
        out.coeffs.emplace(-deg, std::conj(c));
    return out;
}

MatLaurent to_matrix(const ScalarLaurent& a) {
    MatLaurent out = make_symbol(1, 1);
    for (const auto& [deg, c] : a.coeffs) {
        Mat m(1, 1);
        m(0, 0) = c;
        out.coeffs.emplace(deg, std::move(m));
    }
    return out;
}

ScalarLaurent to_scalar(const MatLaurent& a) {
    if (a.rows != 1 || a.cols != 1)
        throw std::invalid_argument("scalar view needs a 1x1 symbol");
    ScalarLaurent out;
    for (const auto& [deg, m] : a.coeffs) out.coeffs.emplace(deg, m(0, 0));
    return out;
}

MatLaurent mul_scalar(const ScalarLaurent& s, const MatLaurent& a) {
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [ds, cs] : s.coeffs)
        for (const auto& [da, ma] : a.coeffs) add_coeff(out, ds + da, cs * ma);
    return out;
}

namespace {

ScalarLaurent entry_of(const MatLaurent& a, int i, int j) {
    ScalarLaurent out;
    for (const auto& [deg, m] : a.coeffs)
        if (!negligible(m(i, j))) out.coeffs.emplace(deg, m(i, j));
    return out;
}

ScalarLaurent det_rec(const std::vector<std::vector<ScalarLaurent>>& e) {
    const std::size_t n = e.size();
    if (n == 1) return e[0][0];
    ScalarLaurent acc;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<ScalarLaurent>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<ScalarLaurent> row;
            row.reserve(n - 1);
            for (std::size_t c = 1; c < n; ++c) row.push_back(e[r][c]);
            minor.push_back(std::move(row));
        }
        ScalarLaurent term = scalar_mul(e[i][0], det_rec(minor));
        if (i % 2 == 1) term = scalar_scale(term, -1.0);
        acc = scalar_add(acc, term);
    }
    return acc;
}

}  // namespace

ScalarLaurent det_on_circle(const MatLaurent& a) {
    if (a.rows != a.cols)
        throw std::invalid_argument("determinant needs a square symbol");
    std::vector<std::vector<ScalarLaurent>> e(a.rows,
                                              std::vector<ScalarLaurent>(a.cols));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) e[i][j] = entry_of(a, i, j);
    return det_rec(e);
}

ScalarLaurent trace_of(const MatLaurent& a) {
    if (a.rows != a.cols)
        throw std::invalid_argument("trace needs a square symbol");
    ScalarLaurent out;
    for (const auto& [deg, m] : a.coeffs) {
        const cplx t = m.trace();
        if (!negligible(t)) out.coeffs.emplace(deg, t);
    }
    return out;
}

ScalarLaurent series_inverse(const ScalarLaurent& h, int cap) {
    if (scalar_is_zero(h) || scalar_min_degree(h) < 0)
        throw std::invalid_argument("series inverse needs an analytic symbol");
    const cplx h0 = scalar_coeff(h, 0);
    if (std::abs(h0) < 1e-300)
        throw std::domain_error("series inverse needs h(0) != 0");
    const int d = scalar_max_degree(h);
    std::vector<cplx> b(static_cast<std::size_t>(cap) + 1, 0.0);
    b[0] = 1.0 / h0;
    for (int n = 1; n <= cap; ++n) {
        cplx acc = 0.0;
        for (int i = 1; i <= std::min(n, d); ++i)
            acc += scalar_coeff(h, i) * b[static_cast<std::size_t>(n - i)];
        b[static_cast<std::size_t>(n)] = -acc / h0;
    }
    ScalarLaurent out;
    for (int n = 0; n <= cap; ++n)
        if (!negligible(b[static_cast<std::size_t>(n)]))
            out.coeffs.emplace(n, b[static_cast<std::size_t>(n)]);
    return out;
}

ScalarLaurent series_exp(const ScalarLaurent& g, int cap) {
    if (!scalar_is_zero(g) && scalar_min_degree(g) < 0)
        throw std::invalid_argument("series exp needs an analytic symbol");
    std::vector<cplx> f(static_cast<std::size_t>(cap) + 1, 0.0);
    f[0] = std::exp(scalar_coeff(g, 0));
    for (int n = 1; n <= cap; ++n) {
        cplx acc = 0.0;
        for (int k = 1; k <= n; ++k)
            acc += static_cast<double>(k) * scalar_coeff(g, k) *
                   f[static_cast<std::size_t>(n - k)];
        f[static_cast<std::size_t>(n)] = acc / static_cast<double>(n);
    }
    ScalarLaurent out;
    for (int n = 0; n <= cap; ++n)
        if (!negligible(f[static_cast<std::size_t>(n)]))
            out.coeffs.emplace(n, f[static_cast<std::size_t>(n)]);
    return out;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& c) {
    if (c.size() < 2) return {};
    const std::size_t deg = c.size() - 1;
    if (std::abs(c.back()) < 1e-300)
        throw std::invalid_argument("leading coefficient vanishes");
    Mat companion = Mat::Zero(deg, deg);
    for (std::size_t i = 0; i + 1 < deg; ++i) companion(i + 1, i) = 1.0;
    for (std::size_t i = 0; i < deg; ++i)
        companion(i, deg - 1) = -c[i] / c.back();
    Eigen::ComplexEigenSolver<Mat> es(companion, false);
    std::vector<cplx> roots(deg);
    for (std::size_t i = 0; i < deg; ++i) roots[i] = es.eigenvalues()(i);

    auto p = [&](cplx w) {
        cplx v = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * w + c[i];
        return v;
    };
    auto dp = [&](cplx w) {
        cplx v = 0.0;
        for (std::size_t i = c.size(); i-- > 1;)
            v = v * w + static_cast<double>(i) * c[i];
        return v;
    };
    for (auto& w : roots)
        for (int it = 0; it < 3; ++it) {
            const cplx d = dp(w);
            if (std::abs(d) < 1e-12 * std::abs(c.back())) break;
            const cplx step = p(w) / d;
            if (!std::isfinite(std::abs(step)) || std::abs(step) > 0.5) break;
            w -= step;
        }
    return roots;
}

namespace {

double grid_residual_sq_modulus(const ScalarLaurent& h, const ScalarLaurent& rho,
                                int n) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * i / n);
        const double hv = std::norm(scalar_eval(h, z));
        const double rv = scalar_eval(rho, z).real();
        worst = std::max(worst, std::abs(hv - rv));
    }
    return worst;
}

}  // namespace

OuterFactor fejer_riesz(const ScalarLaurent& rho, double tol) {
    if (rho.coeffs.empty()) {
        OuterFactor out;
        out.degenerate = true;
        return out;
    }
    double scale = 0.0;
    for (const auto& [deg, c] : rho.coeffs) scale = std::max(scale, std::abs(c));
    for (const auto& [deg, c] : rho.coeffs)
        if (std::abs(c - std::conj(scalar_coeff(rho, -deg))) > 1e-12 * scale)
            throw std::invalid_argument(
                "spectral factorization needs Hermitian coefficients");
    const int d = scalar_max_degree(rho);

    const int grid = std::max(4 * d + 1, 64);
    double min_val = std::numeric_limits<double>::infinity();
    double max_val = -min_val;
    for (int i = 0; i < grid; ++i) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * i / grid);
        const cplx v = scalar_eval(rho, z);
        if (std::abs(v.imag()) > 1e-10 * std::max(scale, 1.0))
            throw std::invalid_argument("symbol is not real on the circle");
        min_val = std::min(min_val, v.real());
        max_val = std::max(max_val, v.real());
    }
    if (min_val < -1e-10 * std::max(max_val, 1.0))
        throw std::domain_error("symbol is negative on the circle");

    OuterFactor out;
    if (d == 0) {
        out.h = scalar_constant(std::sqrt(scalar_coeff(rho, 0).real()));
        out.residual = 0.0;
        return out;
    }

    // Roots of w^d rho(w) come in (w, 1/conj(w)) pairs; averaging each pair's
    // outside representatives recovers quadratic accuracy at boundary zeros.
    std::vector<cplx> pc(static_cast<std::size_t>(2 * d) + 1);
    for (int j = 0; j <= 2 * d; ++j)
        pc[static_cast<std::size_t>(j)] = scalar_coeff(rho, j - d);
    std::vector<cplx> roots = poly_roots(pc);
    std::vector<bool> used(roots.size(), false);
    std::vector<cplx> outside;
    std::vector<std::size_t> order(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(roots[a]) > std::abs(roots[b]);
    });
    for (std::size_t oi : order) {
        if (used[oi]) continue;
        used[oi] = true;
        const cplx w = roots[oi];
        const cplx mirror = 1.0 / std::conj(w);
        std::size_t best = roots.size();
        double best_gap = 0.0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (used[j]) continue;
            const double gap = std::abs(roots[j] - mirror);
            if (best == roots.size() || gap < best_gap) {
                best = j;
                best_gap = gap;
            }
        }
        if (best == roots.size()) break;
        used[best] = true;
        outside.push_back(0.5 * (w + 1.0 / std::conj(roots[best])));
    }
    if (static_cast<int>(outside.size()) != d)
        throw std::runtime_error("root pairing failed");

    std::vector<cplx> hc{1.0};
    for (const cplx& w : outside) {
        std::vector<cplx> next(hc.size() + 1, 0.0);
        for (std::size_t i = 0; i < hc.size(); ++i) {
            next[i + 1] += hc[i];
            next[i] -= w * hc[i];
        }
        hc = std::move(next);
    }
    double norm_sq = 0.0;
    for (const cplx& c : hc) norm_sq += std::norm(c);
    const double s = std::sqrt(scalar_coeff(rho, 0).real() / norm_sq);
    const cplx h0 = hc[0];
    const cplx phase =
        std::abs(h0) > 0 ? std::conj(h0) / std::abs(h0) : cplx(1.0);
    ScalarLaurent h;
    for (std::size_t i = 0; i < hc.size(); ++i) {
        const cplx c = s * phase * hc[i];
        if (!negligible(c)) h.coeffs.emplace(static_cast<int>(i), c);
    }
    out.h = std::move(h);
    out.residual = grid_residual_sq_modulus(out.h, rho, std::max(8 * d + 1, 64));
    if (out.residual > tol)
        throw std::runtime_error("spectral factor residual above tolerance");
    return out;
}

OuterFactor outer_from_modulus(const std::vector<double>& m, int degree_cap) {
    const int n = static_cast<int>(m.size());
    if (n < 1) throw std::invalid_argument("empty modulus grid");
    if (degree_cap < 0) throw std::invalid_argument("negative degree cap");
    for (double v : m)
        if (!(v > 1e-13))
            throw std::domain_error("modulus vanishes on a node");

    std::vector<double> logs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) logs[i] = std::log(m[i]);

    const int top = std::min(degree_cap, n / 2);
    ScalarLaurent g;
    for (int j = 0; j <= top; ++j) {
        cplx acc = 0.0;
        for (int i = 0; i < n; ++i)
            acc += logs[static_cast<std::size_t>(i)] *
                   std::polar(1.0, -2.0 * M_PI * i * j / n);
        acc /= static_cast<double>(n);
        scalar_set(g, j, j == 0 ? acc : 2.0 * acc);
    }
    OuterFactor out;
    out.h = series_exp(g, degree_cap);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * i / n);
        const double hv = std::norm(scalar_eval(out.h, z));
        worst = std::max(worst, std::abs(hv - m[static_cast<std::size_t>(i)] *
                                                  m[static_cast<std::size_t>(i)]));
    }
    out.residual = worst;
    return out;
}

namespace {

// One pass of the argument principle; nullopt-like -1e9 marker avoided by
// throwing on guard violations instead.
double phase_sum(const ScalarLaurent& u, int n) {
    double total = 0.0;
    cplx prev = scalar_eval(u, 1.0);
    if (std::abs(prev) <= 1e-8)
        throw std::domain_error("symbol modulus below Fredholm guard");
    for (int i = 1; i <= n; ++i) {
        const cplx z = std::polar(1.0, 2.0 * M_PI * i / n);
        const cplx cur = scalar_eval(u, z);
        if (std::abs(cur) <= 1e-8)
            throw std::domain_error("symbol modulus below Fredholm guard");
        total += std::arg(cur / prev);
        prev = cur;
    }
    return total / (2.0 * M_PI);
}

}  // namespace

int winding_number(const ScalarLaurent& u, int n_points) {
    if (scalar_is_zero(u))
        throw std::domain_error("symbol modulus below Fredholm guard");
    int n = std::max({n_points, 2 * scalar_span(u) + 1, 16});
    double w = phase_sum(u, n);
    for (int round = 0; round < 8; ++round) {
        const double w2 = phase_sum(u, 2 * n);
        if (std::lround(w) == std::lround(w2) &&
            std::abs(w - std::lround(w)) < 0.25 &&
            std::abs(w2 - std::lround(w2)) < 0.25)
            return static_cast<int>(std::lround(w2));
        n *= 2;
        w = w2;
    }
    throw std::runtime_error("winding number did not stabilize");
}

int toeplitz_index(const ScalarLaurent& u, int n_points) {
    return -winding_number(u, n_points);
}

CertReport badly_approximable_certificate(const ScalarLaurent& phi,
                                          double tol) {
    CertReport report;
    report.subject = "scalar badly-approximable certificate";

    const int n = std::max(2 * scalar_span(phi) + 1, 64);
    double lo = 0.0, hi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v =
            std::abs(scalar_eval(phi, std::polar(1.0, 2.0 * M_PI * i / n)));
        if (i == 0) {
            lo = hi = v;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    CertCheck modulus;
    modulus.id = "constant_modulus";
    modulus.anchor = "pointwise modulus is constant on the circle";
    modulus.measured = {hi, lo};
    modulus.tol = tol;
    modulus.verdict =
        (hi - lo <= tol * std::max(hi, 1.0)) ? Verdict::pass : Verdict::fail;
    report.add(modulus);

    CertCheck fredholm;
    fredholm.id = "fredholm";
    fredholm.anchor = "modulus bounded away from zero (Fredholm guard)";
    fredholm.measured = {lo};
    fredholm.tol = 1e-8;
    fredholm.verdict = lo > 1e-8 ? Verdict::pass : Verdict::fail;
    report.add(fredholm);

    CertCheck index;
    index.id = "positive_index";
    index.anchor = "Toeplitz index is at least one";
    index.tol = 0.0;
    if (lo > 1e-8) {
        const int ind = toeplitz_index(phi, n);
        index.measured = {static_cast<double>(ind)};
        index.verdict = ind >= 1 ? Verdict::pass : Verdict::fail;
    } else {
        index.verdict = Verdict::fail;
        index.note = "index unavailable: modulus below guard";
    }
    report.add(index);
    return report;
}

}  // namespace superopt
