#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cohomkern {

// Machine-readable pass/fail record; verification failures are report
// entries, never exceptions.
struct Claim {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerificationReport {
    std::vector<Claim> claims;
    std::vector<std::pair<std::string, int64_t>> ranks;

    void add(std::string id, bool pass, std::string detail = "");
    void set_rank(std::string name, int64_t v);
    void merge(const VerificationReport& other);
    bool all_pass() const;
    size_t failed() const;
};

std::string report_text(const VerificationReport& r, bool with_timing = false);

}  // namespace cohomkern
