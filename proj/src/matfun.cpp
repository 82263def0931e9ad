#include "matfun.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "workers.hpp"

namespace superopt {

int grid_guard(const MatLaurent& a, int floor_n) {
    const int need = 2 * degree_span(a) + 1;
    return std::max(need, floor_n);
}

GridSamples sample(const MatLaurent& a, int n_points) {
    if (n_points < 2 * degree_span(a) + 1)
        throw std::invalid_argument(
            "grid too small for exact quadrature on this symbol");
    GridSamples g;
    g.rows = a.rows;
    g.cols = a.cols;
    g.points.resize(n_points);
    g.values.resize(n_points);
    g.svals.resize(n_points);
    const double step = 2.0 * M_PI / n_points;
    parallel_for(n_points, [&](std::size_t i) {
        const cplx z = std::polar(1.0, step * static_cast<double>(i));
        g.points[i] = z;
        g.values[i] = eval(a, z);
        Eigen::JacobiSVD<Mat> svd(g.values[i]);
        g.svals[i] = svd.singularValues();
    });
    return g;
}

namespace {

double schatten(const Eigen::VectorXd& s, double q) {
    if (s.size() == 0) return 0.0;
    if (q == 1.0) return s.sum();
    if (q == 2.0) return s.norm();
    return s(0);  // nonincreasing, so S_inf is the head
}

}  // namespace

MixedNorm mixed_norm(const GridSamples& g, double p, double q) {
    MixedNorm out;
    out.p = p;
    out.q = q;
    out.grid_n = static_cast<int>(g.points.size());
    if (p == inf_exponent) {
        out.is_grid_max = true;
        double best = 0.0;
        for (const auto& s : g.svals) best = std::max(best, schatten(s, q));
        out.value = best;
        return out;
    }
    double acc = 0.0;
    for (const auto& s : g.svals) acc += std::pow(schatten(s, q), p);
    out.value = std::pow(acc / static_cast<double>(g.svals.size()), 1.0 / p);
    return out;
}

RankProfile rank_profile(const GridSamples& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("rank tolerance must be positive");
    RankProfile out;
    out.per_node.reserve(g.svals.size());
    std::map<int, int> votes;
    for (const auto& s : g.svals) {
        int r = 0;
        if (s.size() > 0 && s(0) > 0) {
            const double floor = tol * s(0);
            for (Eigen::Index j = 0; j < s.size(); ++j)
                if (s(j) > floor) ++r;
        }
        out.per_node.push_back(r);
        ++votes[r];
        out.max_rank = std::max(out.max_rank, r);
    }
    int best_count = -1;
    for (const auto& [r, c] : votes)
        if (c > best_count) {
            best_count = c;
            out.essential = r;
        }
    out.ambiguous =
        best_count * 100 < static_cast<int>(out.per_node.size()) * 99;
    return out;
}

bool is_unitary_valued(const GridSamples& g, double tol) {
    if (g.rows != g.cols)
        throw std::invalid_argument("unitarity test needs a square symbol");
    const Mat eye = Mat::Identity(g.cols, g.cols);
    for (const auto& v : g.values) {
        const Mat gap = v.adjoint() * v - eye;
        if (gap.cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

bool is_inner(const MatLaurent& a, double tol) {
    if (a.rows != a.cols)
        throw std::invalid_argument("innerness test needs a square symbol");
    if (!membership(a, Space::Hinf)) return false;
    return is_unitary_valued(sample(a, grid_guard(a)), tol);
}

namespace {

GridSamples guard_sample(const MatLaurent& a, int n_points) {
    const int n = n_points > 0 ? std::max(n_points, grid_guard(a)) : grid_guard(a);
    return sample(a, n);
}

}  // namespace

double norm_linf_s1(const MatLaurent& a, int n_points) {
    return mixed_norm(guard_sample(a, n_points), inf_exponent, 1.0).value;
}

double norm_linf_op(const MatLaurent& a, int n_points) {
    return mixed_norm(guard_sample(a, n_points), inf_exponent, inf_exponent).value;
}

double norm_l2_op(const MatLaurent& a, int n_points) {
    return mixed_norm(guard_sample(a, n_points), 2.0, inf_exponent).value;
}

double norm_l1_op(const MatLaurent& a, int n_points) {
    return mixed_norm(guard_sample(a, n_points), 1.0, inf_exponent).value;
}

double norm_l2_frobenius(const MatLaurent& a) {
    double acc = 0.0;
    for (const auto& [deg, m] : a.coeffs) acc += m.squaredNorm();
    return std::sqrt(acc);
}

}  // namespace superopt
