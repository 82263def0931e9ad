#include "json_io.hpp"

#include "json.hpp"

#include <stdexcept>

namespace superopt {

using nlohmann::json;

std::string symbol_to_json(const MatLaurent& a, int indent) {
    json out;
    out["rows"] = a.rows;
    out["cols"] = a.cols;
    json coeffs = json::array();
    for (const auto& [deg, m] : a.coeffs) {
        json re = json::array(), im = json::array();
        for (int i = 0; i < a.rows; ++i) {
            json rrow = json::array(), irow = json::array();
            for (int j = 0; j < a.cols; ++j) {
                rrow.push_back(m(i, j).real());
                irow.push_back(m(i, j).imag());
            }
            re.push_back(std::move(rrow));
            im.push_back(std::move(irow));
        }
        coeffs.push_back(json{{"deg", deg}, {"re", std::move(re)}, {"im", std::move(im)}});
    }
    out["coeffs"] = std::move(coeffs);
    return out.dump(indent);
}

namespace {

void fill_part(Mat& m, const json& part, bool imag_part, int rows, int cols) {
    if (!part.is_array() || static_cast<int>(part.size()) != rows)
        throw std::invalid_argument("coefficient matrix has the wrong shape");
    for (int i = 0; i < rows; ++i) {
        const json& row = part[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("coefficient matrix has the wrong shape");
        for (int j = 0; j < cols; ++j) {
            const json& v = row[static_cast<std::size_t>(j)];
            if (!v.is_number())
                throw std::invalid_argument("coefficient entries must be numbers");
            if (imag_part)
                m(i, j) += cplx(0.0, v.get<double>());
            else
                m(i, j) += cplx(v.get<double>(), 0.0);
        }
    }
}

}  // namespace

MatLaurent symbol_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("invalid JSON: ") + ex.what());
    }
    if (!in.is_object() || !in.contains("rows") || !in.contains("cols"))
        throw std::invalid_argument("symbol must be an object with rows and cols");
    if (!in["rows"].is_number_integer() || !in["cols"].is_number_integer())
        throw std::invalid_argument("rows and cols must be integers");
    const int rows = in["rows"].get<int>();
    const int cols = in["cols"].get<int>();
    if (rows < 1 || cols < 1 || rows > 64 || cols > 64)
        throw std::invalid_argument("rows and cols must lie in [1, 64]");
    MatLaurent a = make_symbol(rows, cols);
    if (!in.contains("coeffs")) return a;
    if (!in["coeffs"].is_array())
        throw std::invalid_argument("coeffs must be an array");
    for (const json& c : in["coeffs"]) {
        if (!c.is_object() || !c.contains("deg") || !c["deg"].is_number_integer())
            throw std::invalid_argument("each coefficient needs an integer deg");
        const int deg = c["deg"].get<int>();
        if (deg < -4096 || deg > 4096)
            throw std::invalid_argument("degree out of the supported range");
        Mat m = Mat::Zero(rows, cols);
        if (!c.contains("re"))
            throw std::invalid_argument("each coefficient needs a re matrix");
        fill_part(m, c["re"], false, rows, cols);
        if (c.contains("im")) fill_part(m, c["im"], true, rows, cols);
        add_coeff(a, deg, m);
    }
    return a;
}

std::string report_to_json(const CertReport& r, int indent) {
    json out;
    out["subject"] = r.subject;
    json checks = json::array();
    for (const CertCheck& c : r.checks) {
        json jc{{"id", c.id},
                {"anchor", c.anchor},
                {"measured", c.measured},
                {"tol", c.tol},
                {"verdict", verdict_name(c.verdict)}};
        if (!c.note.empty()) jc["note"] = c.note;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["overall"] = verdict_name(r.overall());
    return out.dump(indent);
}

}  // namespace superopt
