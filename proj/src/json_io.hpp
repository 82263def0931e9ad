#pragma once

#include "report.hpp"
#include "trigpoly.hpp"

#include <string>

namespace superopt {

// {"rows": m, "cols": n, "coeffs": [{"deg": j, "re": [[..]], "im": [[..]]}]}
std::string symbol_to_json(const MatLaurent& a, int indent = -1);

// Throws std::invalid_argument on malformed input ("im" may be omitted).
MatLaurent symbol_from_json(const std::string& text);

// {"subject": .., "checks": [{"id", "anchor", "measured", "tol", "verdict",
//  "note"}], "overall": ..}
std::string report_to_json(const CertReport& r, int indent = 2);

}  // namespace superopt
