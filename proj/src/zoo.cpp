#include "zoo.hpp"

#include "matfun.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace superopt {

namespace {

constexpr double proj_tol = 1e-12;

Mat herm_part(const Mat& p) { return 0.5 * (p + p.adjoint()); }

int projection_rank(const Mat& p) {
    Eigen::SelfAdjointEigenSolver<Mat> es(herm_part(p));
    int rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > 0.5) ++rank;
    return rank;
}

void put_diag(MatLaurent& a, int idx, const ScalarLaurent& s) {
    for (const auto& [deg, c] : s.coeffs) {
        Mat m = Mat::Zero(a.rows, a.cols);
        m(idx, idx) = c;
        add_coeff(a, deg, m);
    }
}

ScalarLaurent unit_scalar() { return scalar_constant(1.0); }

double grid_unimodular_defect(const ScalarLaurent& s) {
    const int n = std::max(2 * scalar_span(s) + 1, 64);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ang = 2.0 * M_PI * static_cast<double>(i) / n;
        const cplx z{std::cos(ang), std::sin(ang)};
        worst = std::max(worst, std::abs(std::abs(scalar_eval(s, z)) - 1.0));
    }
    return worst;
}

}  // namespace

void bp_validate(const BlaschkePotapov& b) {
    const Eigen::Index n = b.unitary_const.rows();
    if (n == 0 || b.unitary_const.cols() != n)
        throw std::invalid_argument("constant factor must be square");
    const Mat ud = b.unitary_const.adjoint() * b.unitary_const - Mat::Identity(n, n);
    if (ud.cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("constant factor is not unitary");
    for (const auto& [lambda, p] : b.factors) {
        if (p.rows() != n || p.cols() != n)
            throw std::invalid_argument("projection size does not match");
        const double scale = 1.0 + p.cwiseAbs().maxCoeff();
        if ((p - p.adjoint()).cwiseAbs().maxCoeff() > proj_tol * scale)
            throw std::invalid_argument("projection is not self-adjoint");
        if ((p * p - p).cwiseAbs().maxCoeff() > proj_tol * scale)
            throw std::invalid_argument("projection is not idempotent");
        if (std::abs(lambda) >= 1.0)
            throw std::invalid_argument("zero must lie in the open disk");
    }
}

int bp_degree(const BlaschkePotapov& b) {
    int deg = 0;
    for (const auto& [lambda, p] : b.factors) {
        (void)lambda;
        deg += projection_rank(p);
    }
    return deg;
}

MatLaurent blaschke_potapov_build(const BlaschkePotapov& b, int degree_cap,
                                  double* tail_bound, double* inner_residual) {
    bp_validate(b);
    if (degree_cap < 1) throw std::invalid_argument("degree cap must be positive");
    const int n = static_cast<int>(b.unitary_const.rows());

    MatLaurent theta = make_symbol(n, n);
    set_coeff(theta, 0, b.unitary_const);

    double tail_total = 0.0;
    for (const auto& [lambda, p] : b.factors) {
        const double al = std::abs(lambda);
        MatLaurent f = make_symbol(n, n);
        // (z - lambda)/(1 - conj(lambda) z) = c0 + c1 z + c2 z^2 + ...
        set_coeff(f, 0, Mat::Identity(n, n) - p - lambda * p);
        const double lead = 1.0 - al * al;
        cplx pw = 1.0;
        for (int i = 1; i <= degree_cap; ++i) {
            const cplx ci = lead * pw;
            if (std::abs(ci) < 1e-17) break;
            add_coeff(f, i, ci * p);
            pw *= std::conj(lambda);
        }
        if (al > 0.0) tail_total += (1.0 + al) * std::pow(al, degree_cap);
        theta = truncate_degrees(mul(theta, f), 0, degree_cap);
    }
    if (tail_total > 1e-9)
        throw std::runtime_error("degree cap too small for the dropped tail");

    if (tail_bound) *tail_bound = tail_total;
    if (inner_residual) {
        const GridSamples g = sample(theta, grid_guard(theta, 64));
        double worst = 0.0;
        const Mat eye = Mat::Identity(n, n);
        for (const Mat& v : g.values)
            worst = std::max(worst,
                             (v.adjoint() * v - eye).cwiseAbs().maxCoeff());
        *inner_residual = worst;
    }
    return theta;
}

ZooEntry diag_vba(const std::vector<double>& t,
                  const std::vector<ScalarLaurent>& thetas,
                  const std::vector<OuterFactor>& hs,
                  const std::optional<MatLaurent>& tail, int degree_cap) {
    const int r = static_cast<int>(t.size());
    if (r == 0) throw std::invalid_argument("at least one weight is required");
    for (int j = 0; j < r; ++j) {
        if (!(t[j] > 0.0))
            throw std::invalid_argument("weights must be positive");
        if (j > 0 && t[j] > t[j - 1] + 1e-12)
            throw std::invalid_argument("weights must be nonincreasing");
    }
    if (static_cast<int>(thetas.size()) != r ||
        static_cast<int>(hs.size()) != r)
        throw std::invalid_argument("one inner and one outer factor per weight");
    const int cap = std::max(degree_cap, 32);

    std::vector<ScalarLaurent> hn(r), th(r);
    for (int j = 0; j < r; ++j) {
        if (hs[j].degenerate)
            throw std::invalid_argument("outer factor is degenerate");
        ScalarLaurent h = hs[j].h;
        scalar_canonicalize(h);
        if (scalar_is_zero(h) || scalar_min_degree(h) < 0)
            throw std::invalid_argument("outer factor must be analytic and nonzero");
        double s2 = 0.0;
        for (const auto& [deg, c] : h.coeffs) s2 += std::norm(c);
        hn[j] = scalar_scale(h, 1.0 / std::sqrt(s2));

        th[j] = thetas[j];
        scalar_canonicalize(th[j]);
        if (scalar_is_zero(th[j]) || scalar_min_degree(th[j]) < 0)
            throw std::invalid_argument("inner factor must be analytic and nonzero");
        if (grid_unimodular_defect(th[j]) > 1e-9)
            throw std::invalid_argument("inner factor is not unimodular on the circle");
    }

    // u_j = zbar conj(theta_j) conj(h_j) / h_j, expanded to the cap
    std::vector<ScalarLaurent> u(r);
    for (int j = 0; j < r; ++j) {
        const ScalarLaurent inv = series_inverse(hn[j], cap);
        const ScalarLaurent num =
            scalar_mul(scalar_conj_on_circle(th[j]), scalar_conj_on_circle(hn[j]));
        u[j] = scalar_shift(scalar_mul(num, inv), -1);
        if (grid_unimodular_defect(u[j]) > 1e-8)
            throw std::runtime_error(
                "quotient expansion cap too small for the outer factor");
    }

    const int tr = tail ? tail->rows : 0;
    const int tc = tail ? tail->cols : 0;
    const bool tail_zero = !tail || is_zero(*tail);
    const int n_rows = r + tr;
    const int n_cols = r + tc;

    MatLaurent phi = make_symbol(n_rows, n_cols);
    for (int j = 0; j < r; ++j) put_diag(phi, j, scalar_scale(u[j], t[j]));
    double tail_norm = 0.0;
    if (tail && !tail_zero) {
        for (const auto& [deg, m] : tail->coeffs) {
            Mat big = Mat::Zero(n_rows, n_cols);
            big.block(r, r, tr, tc) = m;
            add_coeff(phi, deg, big);
        }
        tail_norm = norm_linf_op(*tail);
        if (tail_norm > t[r - 1] + 1e-9)
            throw std::invalid_argument("extra block exceeds the smallest weight");
    }

    // witness prefixes diag(z theta_j h_j^2, j < k)
    std::vector<ScalarLaurent> w(r);
    for (int j = 0; j < r; ++j)
        w[j] = scalar_shift(scalar_mul(th[j], scalar_mul(hn[j], hn[j])), 1);

    // feasibility factor: mean over the grid of max_j |h_j|^2
    int hdeg = 0;
    for (int j = 0; j < r; ++j) hdeg = std::max(hdeg, scalar_max_degree(hn[j]));
    const int n_nu = std::max(128, 8 * hdeg + 1);
    double nu = 0.0;
    for (int i = 0; i < n_nu; ++i) {
        const double ang = 2.0 * M_PI * static_cast<double>(i) / n_nu;
        const cplx z{std::cos(ang), std::sin(ang)};
        double best = 0.0;
        for (int j = 0; j < r; ++j)
            best = std::max(best, std::norm(scalar_eval(hn[j], z)));
        nu += best;
    }
    nu /= n_nu;
    const bool feasible = nu <= 1.0 + 1e-9;

    ZooEntry e;
    e.name = "diag-vba-r" + std::to_string(r);
    e.summary = "diagonal symbol with " + std::to_string(r) +
                " unimodular twisted entries and its diagonal witness";
    e.phi = std::move(phi);
    e.known_t = t;
    if (tail) {
        const int pad = std::min(tr, tc);
        for (int i = 0; i < pad; ++i)
            e.known_t.push_back(tail_zero ? 0.0 : tail_norm);
    }

    const int k_top = tail_zero ? std::min(n_rows, n_cols) : r;
    std::vector<double> partial(static_cast<std::size_t>(r) + 1, 0.0);
    for (int j = 0; j < r; ++j) partial[j + 1] = partial[j] + t[j];
    for (int k = 1; k <= k_top; ++k) {
        MatLaurent psi = make_symbol(n_cols, n_rows);
        for (int j = 0; j < std::min(k, r); ++j) put_diag(psi, j, w[j]);
        e.known_witnesses[k] = std::move(psi);
        const double sk = partial[std::min(k, r)];
        ZooClaim c;
        c.k = k;
        if (feasible) {
            c.id = "sigma-k" + std::to_string(k);
            c.anchor = "weight partial sums";
            c.kind = ClaimKind::sigma_exact;
            c.values = {sk};
        } else {
            c.id = "sigma-range-k" + std::to_string(k);
            c.anchor = "weight partial sums";
            c.kind = ClaimKind::sigma_range;
            c.values = {sk / nu, sk};
            c.note = "witness feasibility factor " + std::to_string(nu);
        }
        e.claims.push_back(std::move(c));
    }

    e.claims.push_back({"pairing-full-sum", "diagonal trace pairing",
                        ClaimKind::pairing_abs, r, {partial[r]}, ""});
    e.claims.push_back({"hankel-norm", "distance to analytic symbols",
                        ClaimKind::hankel_norm_value, 0, {t[0]}, ""});
    if (feasible && tail_zero) {
        e.claims.push_back({"order", "full-sum witness with positive last weight",
                            ClaimKind::order_exact, r, {}, ""});
        e.approximant = make_symbol(n_rows, n_cols);
        e.claims.push_back({"approx-error", "trace-norm error of the zero symbol",
                            ClaimKind::approx_error_value, 0, {partial[r]}, ""});
        std::vector<double> sv = t;
        sv.resize(static_cast<std::size_t>(std::min(n_rows, n_cols)), 0.0);
        e.claims.push_back({"pointwise-svals", "pointwise singular values",
                            ClaimKind::svals_constant, 0, sv, ""});
    }

    const bool all_unit =
        std::all_of(t.begin(), t.end(), [](double v) { return std::abs(v - 1.0) <= 1e-12; });
    if (all_unit && !tail) {
        e.claims.push_back({"unitary-valued", "unitary symbol class",
                            ClaimKind::unitary_valued, 0, {}, ""});
        if (feasible)
            e.claims.push_back({"representation", "unitary witness structure",
                                ClaimKind::representation_roundtrip, r, {}, ""});
    }
    return e;
}

std::pair<ZooEntry, MatLaurent> strict_example_pair() {
    const double rt2 = std::sqrt(2.0);
    const double rt3 = std::sqrt(3.0);
    const double rt5 = std::sqrt(5.0);

    MatLaurent phi = make_symbol(2, 2);
    {
        Mat m0 = Mat::Zero(2, 2);
        m0(1, 0) = -1.0 / rt2;
        set_coeff(phi, 0, m0);
        Mat m1 = Mat::Zero(2, 2);
        m1(0, 0) = 1.0 / rt2;
        m1(1, 1) = 1.0 / rt2;
        set_coeff(phi, -1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(0, 1) = 1.0 / rt2;
        set_coeff(phi, -2, m2);
    }

    MatLaurent f = make_symbol(2, 2);
    {
        Mat m0 = Mat::Zero(2, 2);
        m0(1, 0) = -1.0 / rt2;
        set_coeff(f, 0, m0);
    }

    MatLaurent psi1 = make_symbol(2, 2);
    {
        Mat m1 = Mat::Zero(2, 2);
        m1(0, 0) = 1.0 / rt2;
        set_coeff(psi1, 1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(1, 0) = 1.0 / rt2;
        set_coeff(psi1, 2, m2);
    }

    MatLaurent psi2 = make_symbol(2, 2);
    {
        Mat m1 = Mat::Zero(2, 2);
        m1(0, 0) = 1.0 / rt3;
        m1(1, 1) = 1.0 / rt3;
        set_coeff(psi2, 1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(1, 0) = 1.0 / rt3;
        set_coeff(psi2, 2, m2);
    }

    ZooEntry e;
    e.name = "strict2x2";
    e.summary =
        "2x2 unitary symbol whose best known rank-two pairing stays strictly "
        "below the trace-norm error of its natural analytic candidate";
    e.phi = std::move(phi);
    e.known_t = {1.0, 1.0};
    e.known_witnesses[1] = psi1;
    e.known_witnesses[2] = psi2;
    e.approximant = f;

    const double s_hi = 0.5 * std::sqrt(3.0 + rt5);
    const double s_lo = 0.5 * std::sqrt(3.0 - rt5);
    e.claims = {
        {"unitary-valued", "unitary symbol class", ClaimKind::unitary_valued, 0, {}, ""},
        {"det-winding", "determinant winding", ClaimKind::det_winding_value, 0, {-2.0}, ""},
        {"hankel-norm", "distance to analytic symbols",
         ClaimKind::hankel_norm_value, 0, {1.0}, ""},
        {"pointwise-svals", "pointwise singular values of the error",
         ClaimKind::svals_constant, 0, {s_hi, s_lo}, ""},
        {"approx-error", "trace-norm error of the candidate",
         ClaimKind::approx_error_value, 0, {std::sqrt(10.0) / 2.0}, ""},
        {"error-below-full-sum", "strict gap under the weight sum",
         ClaimKind::approx_error_below, 0, {2.0}, ""},
        {"pairing-k1", "rank-one trace pairing", ClaimKind::pairing_abs, 1, {1.0}, ""},
        {"pairing-k2", "rank-two trace pairing", ClaimKind::pairing_abs, 2,
         {std::sqrt(1.5)}, ""},
        {"sigma-k1", "rank-one bound pair", ClaimKind::sigma_exact, 1, {1.0}, ""},
        {"sigma-k2-range", "rank-two bound pair", ClaimKind::sigma_range, 2,
         {std::sqrt(1.5), std::sqrt(10.0) / 2.0}, ""},
        {"witness-rank-k2", "witness essential rank", ClaimKind::witness_rank, 2,
         {2.0}, ""},
        {"witness-opnorm-k1", "witness pointwise norm",
         ClaimKind::witness_opnorm_const, 1, {1.0}, ""},
        {"witness-opnorm-k2", "witness pointwise norm",
         ClaimKind::witness_opnorm_const, 2, {std::sqrt((3.0 + rt5) / 6.0)}, ""},
        {"order-open", "attainment status", ClaimKind::order_open, 0, {},
         "order 1 refuted, order 2 vs inaccessible open"},
    };
    MatLaurent f_copy = *e.approximant;
    return {std::move(e), std::move(f_copy)};
}

ZooEntry example_order2_unitary() {
    const double rt2 = std::sqrt(2.0);

    MatLaurent phi = make_symbol(2, 2);
    {
        Mat m1 = Mat::Zero(2, 2);
        m1(0, 1) = -1.0 / rt2;
        m1(1, 1) = 1.0 / rt2;
        set_coeff(phi, -1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(0, 0) = 1.0 / rt2;
        m2(1, 0) = 1.0 / rt2;
        set_coeff(phi, -2, m2);
    }

    MatLaurent psi = make_symbol(2, 2);
    {
        Mat m1 = Mat::Zero(2, 2);
        m1(1, 0) = -1.0 / rt2;
        m1(1, 1) = 1.0 / rt2;
        set_coeff(psi, 1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(0, 0) = 1.0 / rt2;
        m2(0, 1) = 1.0 / rt2;
        set_coeff(psi, 2, m2);
    }

    MatLaurent psi1 = make_symbol(2, 2);
    {
        Mat m1 = Mat::Zero(2, 2);
        m1(1, 0) = -1.0 / rt2;
        set_coeff(psi1, 1, m1);
        Mat m2 = Mat::Zero(2, 2);
        m2(0, 0) = 1.0 / rt2;
        set_coeff(psi1, 2, m2);
    }

    ZooEntry e;
    e.name = "order2_unitary";
    e.summary =
        "2x2 unitary polynomial symbol with a rank-two witness attaining the "
        "full pairing sum 2";
    e.phi = std::move(phi);
    e.known_t = {1.0, 1.0};
    e.known_witnesses[1] = std::move(psi1);
    e.known_witnesses[2] = std::move(psi);
    e.claims = {
        {"unitary-valued", "unitary symbol class", ClaimKind::unitary_valued, 0, {}, ""},
        {"det-winding", "determinant winding", ClaimKind::det_winding_value, 0, {-3.0}, ""},
        {"hankel-norm", "distance to analytic symbols",
         ClaimKind::hankel_norm_value, 0, {1.0}, ""},
        {"pairing-k1", "rank-one trace pairing", ClaimKind::pairing_abs, 1, {1.0}, ""},
        {"pairing-k2", "rank-two trace pairing", ClaimKind::pairing_abs, 2, {2.0}, ""},
        {"sigma-k1", "rank-one bound pair", ClaimKind::sigma_exact, 1, {1.0}, ""},
        {"sigma-k2", "rank-two bound pair", ClaimKind::sigma_exact, 2, {2.0}, ""},
        {"witness-rank-k2", "witness essential rank", ClaimKind::witness_rank, 2,
         {2.0}, ""},
        {"witness-opnorm-k2", "witness pointwise norm",
         ClaimKind::witness_opnorm_const, 2, {1.0}, ""},
        {"order", "full-sum witness with positive last weight",
         ClaimKind::order_exact, 2, {}, ""},
        {"representation", "unitary witness structure",
         ClaimKind::representation_roundtrip, 2, {}, ""},
    };
    return e;
}

std::vector<std::string> zoo_names() {
    return {"strict2x2", "order2_unitary", "weighted_diag", "diag_pair"};
}

ZooEntry zoo_entry(const std::string& name) {
    if (name == "strict2x2") return strict_example_pair().first;
    if (name == "order2_unitary") return example_order2_unitary();
    if (name == "weighted_diag") {
        OuterFactor one;
        one.h = unit_scalar();
        ZooEntry e = diag_vba({1.0, 0.5}, {scalar_monomial(2), unit_scalar()},
                              {one, one}, make_symbol(1, 1));
        e.name = "weighted_diag";
        e.summary =
            "3x3 co-analytic diagonal with weights (1, 0.5) attaining pairing "
            "1.5; the zero symbol is a best analytic approximant";
        return e;
    }
    if (name == "diag_pair") {
        ScalarLaurent rho = scalar_constant(5.0);
        scalar_set(rho, 1, 2.0);
        scalar_set(rho, -1, 2.0);
        const OuterFactor of = fejer_riesz(rho);
        ZooEntry e = diag_vba({1.0, 1.0}, {unit_scalar(), scalar_monomial(1)},
                              {of, of});
        e.name = "diag_pair";
        e.summary =
            "2x2 unitary diagonal built from one shared outer factor and "
            "twisted inner phases; full pairing 2";
        return e;
    }
    throw std::invalid_argument("unknown zoo entry: " + name);
}

}  // namespace superopt
