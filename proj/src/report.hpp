#ifndef SUPEROPT_REPORT_HPP
#define SUPEROPT_REPORT_HPP

#include <string>
#include <vector>

namespace superopt {

enum class Verdict { pass, fail, inconclusive };

const char* verdict_name(Verdict v);

struct CertCheck {
    std::string id;
    std::string anchor;  // short statement of the claim being checked
    std::vector<double> measured;
    double tol = 0.0;
    Verdict verdict = Verdict::pass;
    std::string note;
};

// overall: pass iff every check passes; fail if any check fails;
// inconclusive otherwise (bound-gap situations only).
struct CertReport {
    std::string subject;
    std::vector<CertCheck> checks;

    Verdict overall() const;
    void add(CertCheck c);
    void merge(const CertReport& other);  // appends with "subject/" id prefix
    const CertCheck* find(const std::string& id) const;
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "fail";
}

inline Verdict CertReport::overall() const {
    Verdict out = Verdict::pass;
    for (const auto& c : checks) {
        if (c.verdict == Verdict::fail) return Verdict::fail;
        if (c.verdict == Verdict::inconclusive) out = Verdict::inconclusive;
    }
    return out;
}

inline void CertReport::add(CertCheck c) { checks.push_back(std::move(c)); }

inline void CertReport::merge(const CertReport& other) {
    for (auto c : other.checks) {
        c.id = other.subject + "/" + c.id;
        checks.push_back(std::move(c));
    }
}

inline const CertCheck* CertReport::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace superopt

#endif
