#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tenpara/tensor_ops.hpp"

namespace tenpara {

struct DecayFit {
    bool valid = false;         // at least two diagonals with nonzero suprema
    double slope = 0.0;         // d log2(sup) / d (j+j'); +inf sentinel when all zero
    double intercept_log2 = 0.0;
    double r_squared = 0.0;
};

// Per-(j,j') suprema of |coefficients| for all four families, plus a
// least-squares decay fit of the wavelet x wavelet family against j+j'
// (diagonals aggregated by max, zero suprema excluded).
struct DecayReport {
    int max_level_x = -1;
    int max_level_y = -1;
    std::array<std::vector<double>, 4> sup_abs;  // indexed [kind][j*(N'+1)+j']
    DecayFit fit;
    bool all_zero = false;  // wavelet x wavelet family identically zero

    double sup(OperatorKind kind, int j, int jp) const;
};

struct HolderEstimate {
    double alpha_hat = 0.0;
    double norm_value = 0.0;      // tightest constant at rate alpha_hat + offset
    double exponent_offset = 0.5;
};

struct BoundCheckResult {
    bool ok = true;
    int witness_j = -1;   // violating level pair when !ok
    int witness_jp = -1;
    double ratio = 0.0;   // sup / (C 2^-(j+j') rate) at the witness
};

DecayReport decay_report(const TensorCoeffPyramid& pyramid);

// sup over the wavelet x wavelet family of |alpha^(j,j')_(k,k')| / 2^-(j+j')(alpha+offset).
double mixed_holder_norm(const TensorCoeffPyramid& pyramid, double alpha, double offset = 0.5);

// Brute-force mixed-Holder quotients over rectangle corners on the dyadic grid
// (cell centers), deterministic striding, roughly sample_count evaluations of
// the mixed quotient. Degenerate (zero dyadic distance) pairs are skipped.
double direct_mixed_holder_quotients(const UnitGridField& field, double alpha,
                                     std::int64_t sample_count);

// True iff sup(j,j') <= C 2^-(j+j')rate for every level pair of the
// wavelet x wavelet family; on failure reports the worst violator.
BoundCheckResult check_decay_bound(const DecayReport& report, double rate, double c_constant);

// alpha_hat = -slope - offset. Throws on an all-zero or unfittable report.
HolderEstimate estimate_alpha(const DecayReport& report, double offset = 0.5);

// CSV serialization: data rows (j, jprime, family, sup_abs), then a trailing
// fit block with its own header (slope, intercept_log2, r_squared).
void write_decay_csv(const DecayReport& report, std::ostream& out);

} // namespace tenpara
