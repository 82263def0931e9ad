#include "trigpoly.hpp"

namespace superopt {

namespace {

void require_shape(const MatLaurent& a, const MatLaurent& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("symbol shapes do not match");
}

bool negligible(const Mat& m) {
    return m.cwiseAbs().maxCoeff() < canon_tol;
}

}  // namespace

MatLaurent make_symbol(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("symbol shape must be positive");
    MatLaurent a;
    a.rows = rows;
    a.cols = cols;
    return a;
}

MatLaurent identity_symbol(int n) {
    MatLaurent a = make_symbol(n, n);
    a.coeffs[0] = Mat::Identity(n, n);
    return a;
}

void add_coeff(MatLaurent& a, int deg, const Mat& m) {
    if (m.rows() != a.rows || m.cols() != a.cols)
        throw std::invalid_argument("coefficient shape does not match symbol");
    auto it = a.coeffs.find(deg);
    if (it == a.coeffs.end()) {
        if (!negligible(m)) a.coeffs.emplace(deg, m);
        return;
    }
    it->second += m;
    if (negligible(it->second)) a.coeffs.erase(it);
}

void set_coeff(MatLaurent& a, int deg, const Mat& m) {
    if (m.rows() != a.rows || m.cols() != a.cols)
        throw std::invalid_argument("coefficient shape does not match symbol");
    if (negligible(m))
        a.coeffs.erase(deg);
    else
        a.coeffs[deg] = m;
}

Mat coeff(const MatLaurent& a, int deg) {
    auto it = a.coeffs.find(deg);
    if (it == a.coeffs.end()) return Mat::Zero(a.rows, a.cols);
    return it->second;
}

void canonicalize(MatLaurent& a) {
    for (auto it = a.coeffs.begin(); it != a.coeffs.end();) {
        if (negligible(it->second))
            it = a.coeffs.erase(it);
        else
            ++it;
    }
}

bool is_zero(const MatLaurent& a) { return a.coeffs.empty(); }

int min_degree(const MatLaurent& a) {
    return a.coeffs.empty() ? 0 : a.coeffs.begin()->first;
}

int max_degree(const MatLaurent& a) {
    return a.coeffs.empty() ? 0 : a.coeffs.rbegin()->first;
}

int degree_span(const MatLaurent& a) {
    return a.coeffs.empty() ? 0 : max_degree(a) - min_degree(a);
}

Mat eval(const MatLaurent& a, cplx z) {
    Mat v = Mat::Zero(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs) v += std::pow(z, deg) * m;
    return v;
}

MatLaurent add(const MatLaurent& a, const MatLaurent& b) {
    require_shape(a, b);
    MatLaurent out = a;
    for (const auto& [deg, m] : b.coeffs) add_coeff(out, deg, m);
    return out;
}

MatLaurent scale(const MatLaurent& a, cplx s) {
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs) {
        Mat sm = s * m;
        if (!negligible(sm)) out.coeffs.emplace(deg, std::move(sm));
    }
    return out;
}

MatLaurent mul(const MatLaurent& a, const MatLaurent& b) {
    if (a.cols != b.rows)
        throw std::invalid_argument("symbol product shapes do not match");
    MatLaurent out = make_symbol(a.rows, b.cols);
    for (const auto& [da, ma] : a.coeffs)
        for (const auto& [db, mb] : b.coeffs) {
            auto it = out.coeffs.find(da + db);
            if (it == out.coeffs.end())
                out.coeffs.emplace(da + db, ma * mb);
            else
                it->second += ma * mb;
        }
    canonicalize(out);
    return out;
}

MatLaurent shift(const MatLaurent& a, int k) {
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs) out.coeffs.emplace(deg + k, m);
    return out;
}

MatLaurent adjoint_on_circle(const MatLaurent& a) {
    MatLaurent out = make_symbol(a.cols, a.rows);
    for (const auto& [deg, m] : a.coeffs) out.coeffs.emplace(-deg, m.adjoint());
    return out;
}

PairingValue pairing(const MatLaurent& phi, const MatLaurent& psi) {
    if (phi.cols != psi.rows || phi.rows != psi.cols)
        throw std::invalid_argument("pairing shapes do not match");
    cplx total = 0.0;
    for (const auto& [deg, m] : phi.coeffs) {
        auto it = psi.coeffs.find(-deg);
        if (it != psi.coeffs.end()) total += (m * it->second).trace();
    }
    return {total};
}

MatLaurent analytic_part(const MatLaurent& a, bool keep_zero) {
    const int lo = keep_zero ? 0 : 1;
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs)
        if (deg >= lo) out.coeffs.emplace(deg, m);
    return out;
}

MatLaurent coanalytic_part(const MatLaurent& a, bool keep_zero) {
    const int lo = keep_zero ? 0 : 1;
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs)
        if (deg < lo) out.coeffs.emplace(deg, m);
    return out;
}

bool membership(const MatLaurent& a, Space space) {
    switch (space) {
        case Space::L:
            return true;
        case Space::Hinf:
        case Space::H2:
            return a.coeffs.empty() || min_degree(a) >= 0;
        case Space::H1_0:
            return a.coeffs.empty() || min_degree(a) >= 1;
    }
    return false;
}

MatLaurent truncate_degrees(const MatLaurent& a, int lo, int hi) {
    MatLaurent out = make_symbol(a.rows, a.cols);
    for (const auto& [deg, m] : a.coeffs)
        if (deg >= lo && deg <= hi) out.coeffs.emplace(deg, m);
    return out;
}

double max_coeff_abs(const MatLaurent& a) {
    double v = 0.0;
    for (const auto& [deg, m] : a.coeffs)
        v = std::max(v, m.cwiseAbs().maxCoeff());
    return v;
}

}  // namespace superopt
