#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tenpara {

struct CheckResult {
    std::string suite;
    std::string name;
    double value = 0.0;      // measured quantity
    double threshold = 0.0;  // bound it is compared against
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

bool is_known_suite(const std::string& suite);

// Run one invariant suite (parseval, telescope, ftc, decay, residual, or all)
// at the given size with seeded deterministic fields. Thresholds are fixed in
// code; `size` is a per-axis sample count (power of two).
VerifyReport run_verify(const std::string& suite, int size, std::uint64_t seed,
                        int quad_order = 8);

void print_verify(const VerifyReport& report, std::ostream& out);
void write_verify_csv(const VerifyReport& report, std::ostream& out);

} // namespace tenpara
