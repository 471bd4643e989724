#pragma once

#include <string>
#include <vector>

#include "tenpara/nonlinearity.hpp"
#include "tenpara/regularity.hpp"

namespace tenpara {

// Maximum scales (N, N') summed per axis.
struct ScaleRange {
    int n_x = 0;
    int n_y = 0;
};

// Retained per-(j,j') summands of the approximation: the first-order field
// A'(PP f) QQ f and the second-order field A''(PP f) QP f PQ f.
struct ScaleTerm {
    int j = 0;
    int jp = 0;
    UnitGridField first_order;
    UnitGridField second_order;
};

struct ApproxResult {
    UnitGridField approx;
    std::vector<ScaleTerm> terms;  // empty unless keep_terms
};

// Full multiscale tensor paraproduct split A(f) = approx + residual, with the
// telescoping boundary fields A(P^0 P'^(N'+1) f), A(P^(N+1) P'^0 f), A(P^0 P'^0 f).
struct Decomposition {
    UnitGridField input;
    UnitGridField nonlinear;  // A(f)
    UnitGridField approx;     // tilde A_(N,N')(f)
    UnitGridField residual;   // A(f) - approx, exact by construction
    ScaleRange scales;
    std::string nonlinearity_name;
    std::vector<ScaleTerm> terms;
    UnitGridField boundary_coarse_x;   // A(P^0 P'^(N'+1) f)
    UnitGridField boundary_coarse_y;   // A(P^(N+1) P'^0 f)
    UnitGridField boundary_mean;       // A(P^0 P'^0 f)
};

struct TelescopeResult {
    UnitGridField sum;             // double mixed sum of A over scale corners
    UnitGridField corner_fine;     // A(P^(N+1) P'^(N'+1) f)
    UnitGridField corner_coarse_x; // A(P^0 P'^(N'+1) f)
    UnitGridField corner_coarse_y; // A(P^(N+1) P'^0 f)
    UnitGridField corner_mean;     // A(P^0 P'^0 f)
    double collapse_error = 0.0;   // max |sum - four-term collapse|
    UnitGridField collapse() const;
};

// Summary statistics of a decomposition's residual against the input field.
struct ResidualReport {
    double alpha = 0.0;
    bool alpha_above_half = false;  // informational; dyadic metrics accept any alpha > 0
    int analysis_level_x = 0;
    int analysis_level_y = 0;
    DecayReport residual_decay;
    double residual_linf = 0.0;
    double input_norm_alpha = 0.0;        // ||f||  at rate alpha + 1/2
    double residual_norm_2alpha = 0.0;    // ||Delta|| at rate 2 alpha + 1/2
    double residual_norm_2alpha_1 = 0.0;  // ||Delta|| at rate 2 alpha + 1
    double norm_ratio = 0.0;              // residual_norm_2alpha / input_norm_alpha
    bool ratio_applicable = false;        // false when the input has no detail
    BoundCheckResult bound_half;          // rate 2 alpha + 1/2 with the measured constant
    BoundCheckResult bound_one;           // rate 2 alpha + 1 with the measured constant
};

// keep_terms retains all (N+1)(N'+1) per-scale term pairs at full resolution;
// pass false on large grids when only the sums are needed.
ApproxResult paraproduct_approx(const UnitGridField& field, const Nonlinearity& map,
                                ScaleRange scales, bool keep_terms = true);

Decomposition decompose(const UnitGridField& field, const Nonlinearity& map, ScaleRange scales,
                        bool keep_terms = true);

// Double mixed sum of A over scale corners; checks the four-term telescoping
// collapse internally and records the discrepancy.
TelescopeResult telescoping_mixed_sum(const UnitGridField& field, const Nonlinearity& map,
                                      ScaleRange scales);

// Bilinear interpolation between the four scale corners at (j,j'):
// h = omega QP f + mu PQ f + mu omega QQ f, so P^j P'^j' f + h hits each corner
// operator at (mu, omega) in {0,1}^2.
UnitGridField bilinear_interp_h(const UnitGridField& field, int j, int jp, double mu,
                                double omega);

// Residual in integral form: per-(j,j') double integral over (mu, omega) by
// tensor Gauss-Legendre quadrature. Verification oracle for the exact residual.
UnitGridField residual_integral_form(const UnitGridField& field, const Nonlinearity& map,
                                     ScaleRange scales, int quad_order);

// Analyze the residual at the given depth (defaults to the decomposition's
// scales) and report decay, norms and the norm ratio.
ResidualReport residual_report(const Decomposition& dec, double alpha, int analysis_level_x = -1,
                               int analysis_level_y = -1);

void write_residual_report_csv(const ResidualReport& report, std::ostream& out);

// Gauss-Legendre nodes/weights on [0,1]; weights sum to 1.
void gauss_legendre_unit(int order, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace tenpara
