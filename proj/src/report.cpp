#include "cohomkern/report.hpp"

#include <sstream>

namespace cohomkern {

void VerificationReport::add(std::string id, bool pass, std::string detail) {
    claims.push_back(Claim{std::move(id), pass, std::move(detail), 0.0});
}

void VerificationReport::set_rank(std::string name, int64_t v) {
    for (auto& [n, old] : ranks)
        if (n == name) {
            old = v;
            return;
        }
    ranks.emplace_back(std::move(name), v);
}

void VerificationReport::merge(const VerificationReport& other) {
    claims.insert(claims.end(), other.claims.begin(), other.claims.end());
    for (const auto& [n, v] : other.ranks) set_rank(n, v);
}

bool VerificationReport::all_pass() const {
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

size_t VerificationReport::failed() const {
    size_t n = 0;
    for (const auto& c : claims)
        if (!c.pass) ++n;
    return n;
}

std::string report_text(const VerificationReport& r, bool with_timing) {
    std::ostringstream os;
    for (const auto& c : r.claims) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.id;
        if (with_timing) {
            os.setf(std::ios::fixed);
            os.precision(3);
            os << "  [" << c.seconds << "s]";
        }
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    if (!r.ranks.empty()) {
        os << "ranks:";
        for (const auto& [n, v] : r.ranks) os << ' ' << n << '=' << v;
        os << '\n';
    }
    return os.str();
}

}  // namespace cohomkern
