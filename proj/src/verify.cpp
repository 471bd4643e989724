#include "tenpara/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "tenpara/io.hpp"
#include "tenpara/paraproduct.hpp"
#include "tenpara/random_field.hpp"
#include "tenpara/ring.hpp"
#include "tenpara/wavelet1d.hpp"

namespace tenpara {

namespace {

// Checks where smaller is better pass when value <= threshold; bracket checks
// are encoded as two rows.
void push(VerifyReport& report, const std::string& suite, const std::string& name, double value,
          double threshold, bool pass) {
    report.checks.push_back(CheckResult{suite, name, value, threshold, pass});
}

void push_le(VerifyReport& report, const std::string& suite, const std::string& name,
             double value, double threshold) {
    push(report, suite, name, value, threshold, value <= threshold);
}

double parseval_gap_1d(const std::vector<double>& values) {
    const CoeffPyramid1D pyramid = analyze_1d(values);
    const double cell = std::ldexp(1.0, -(pyramid.max_level + 1));
    double norm_sq = 0.0;
    for (double v : values) norm_sq += v * v * cell;
    double coeff_sq = pyramid.scaling[0][0] * pyramid.scaling[0][0];
    for (const auto& level : pyramid.detail) {
        for (double d : level) coeff_sq += d * d;
    }
    return std::abs(norm_sq - coeff_sq);
}

double parseval_gap_2d(const UnitGridField& field) {
    const TensorCoeffPyramid pyramid =
        tensor_analyze(field, field.level_x() - 1, field.level_y() - 1);
    double coeff_sq = 0.0;
    const double mean = pyramid.at(OperatorKind::ScalingScaling, 0, 0, 0, 0);
    coeff_sq += mean * mean;
    for (int j = 0; j <= pyramid.max_level_x(); ++j) {
        for (double v : pyramid.block(OperatorKind::WaveletScaling, j, 0)) coeff_sq += v * v;
    }
    for (int jp = 0; jp <= pyramid.max_level_y(); ++jp) {
        for (double v : pyramid.block(OperatorKind::ScalingWavelet, 0, jp)) coeff_sq += v * v;
    }
    for (int j = 0; j <= pyramid.max_level_x(); ++j) {
        for (int jp = 0; jp <= pyramid.max_level_y(); ++jp) {
            for (double v : pyramid.block(OperatorKind::WaveletWavelet, j, jp)) coeff_sq += v * v;
        }
    }
    return std::abs(field_l2_norm_sq(field) - coeff_sq);
}

int level_for_size(int size) {
    if (size < 2) throw std::domain_error("size must be >= 2");
    return level_of_length(static_cast<std::size_t>(size));
}

void suite_parseval(VerifyReport& report, int size, std::uint64_t seed) {
    const int level = level_for_size(size);
    const std::vector<double> vec = random_values(static_cast<std::size_t>(size) * size, seed);
    push_le(report, "parseval", "parseval_1d", parseval_gap_1d(vec), 1e-12);
    const std::vector<double> round = synthesize_1d(analyze_1d(vec), 2 * level);
    double rt = 0.0;
    for (std::size_t i = 0; i < vec.size(); ++i) rt = std::max(rt, std::abs(round[i] - vec[i]));
    push_le(report, "parseval", "round_trip_1d", rt, 1e-12);

    const UnitGridField field = random_field(level, level, 0.3, seed + 1);
    push_le(report, "parseval", "parseval_2d", parseval_gap_2d(field), 1e-12);
    const UnitGridField back =
        tensor_synthesize(tensor_analyze(field, level - 1, level - 1), level, level);
    push_le(report, "parseval", "round_trip_2d", max_abs_diff(field, back), 1e-12);
}

void suite_telescope(VerifyReport& report, int size, std::uint64_t seed) {
    const int level = level_for_size(size);
    const ScaleRange scales{level - 1, level - 1};
    const UnitGridField field = random_field(level, level, 0.3, seed);
    for (const char* name : {"identity", "square", "exp02"}) {
        const TelescopeResult tel =
            telescoping_mixed_sum(field, Nonlinearity::by_name(name), scales);
        push_le(report, "telescope", std::string("collapse_") + name, tel.collapse_error, 1e-12);
    }
}

void suite_ftc(VerifyReport& report, int size, std::uint64_t seed, int quad_order) {
    const int level = level_for_size(size);
    const ScaleRange scales{std::min(3, level - 1), std::min(3, level - 1)};
    const UnitGridField field = random_field(level, level, 0.3, seed);
    for (const char* name : {"identity", "square"}) {
        const Nonlinearity map = Nonlinearity::by_name(name);
        const UnitGridField integral =
            residual_integral_form(field, map, scales, std::max(4, quad_order));
        const TelescopeResult tel = telescoping_mixed_sum(field, map, scales);
        const ApproxResult approx = paraproduct_approx(field, map, scales, false);
        const UnitGridField expected = subtract(tel.sum, approx.approx);
        push_le(report, "ftc", std::string("integral_identity_") + name,
                max_abs_diff(integral, expected), 1e-10);
    }
}

void suite_decay(VerifyReport& report, int size, std::uint64_t /*seed*/) {
    const int level = level_for_size(size);
    if (level < 4) throw std::domain_error("decay suite needs size >= 16");
    const int n = std::min(6, level - 2);
    const Nonlinearity map = Nonlinearity::exp_decay(0.2);

    // Synthetic exact-decay pyramid: the estimator must be exact.
    {
        const DecayReport synthetic = decay_report(exact_decay_pyramid(6, 6, 0.75 + 0.5));
        const HolderEstimate est = estimate_alpha(synthetic, 0.5);
        push_le(report, "decay", "synthetic_alpha_error", std::abs(est.alpha_hat - 0.75), 1e-9);
    }

    const double slope_tolerance = 0.15;
    RingFieldSpec spec;
    spec.alpha = 0.4;
    spec.grid_level = level;
    const UnitGridField field = generate_ring(spec);
    const Decomposition dec = decompose(field, map, ScaleRange{n, n}, false);
    const ResidualReport rr = residual_report(dec, spec.alpha);
    const DecayReport input_decay = decay_report(tensor_analyze(field, n, n));

    push_le(report, "decay", "ring04_input_slope", input_decay.fit.slope,
            -(spec.alpha + 0.5) + slope_tolerance);
    push_le(report, "decay", "ring04_residual_slope", rr.residual_decay.fit.slope,
            -(2.0 * spec.alpha + 0.5) + 0.2);
    push_le(report, "decay", "ring04_slope_separation", rr.residual_decay.fit.slope,
            input_decay.fit.slope - 0.25);

    // Input-regularity estimates for the two rough ring fields.
    for (double alpha : {0.4, 0.04}) {
        RingFieldSpec s;
        s.alpha = alpha;
        s.grid_level = level;
        const DecayReport rep =
            decay_report(tensor_analyze(generate_ring(s), level - 1, level - 1));
        const HolderEstimate est = estimate_alpha(rep, 0.5);
        const double lo = alpha / 2.0;
        const double hi = 2.0 * alpha + 0.1;
        push(report, "decay", "ring_alpha_estimate_" + format_double(alpha), est.alpha_hat, hi,
             est.alpha_hat >= lo && est.alpha_hat <= hi);
    }
}

void suite_residual(VerifyReport& report, int size, std::uint64_t seed) {
    const int level = level_for_size(size);
    const ScaleRange scales{std::min(4, level - 1), std::min(4, level - 1)};
    double worst = 0.0;
    for (std::uint64_t k = 0; k < 5; ++k) {
        const UnitGridField field = random_field(level, level, 0.3, seed + k);
        for (const char* name : {"identity", "square", "exp02"}) {
            const Decomposition dec = decompose(field, Nonlinearity::by_name(name), scales, false);
            const UnitGridField recombined = add(dec.approx, dec.residual);
            worst = std::max(worst, max_abs_diff(recombined, dec.nonlinear));
        }
    }
    push_le(report, "residual", "exact_split", worst, 1e-12);

    // Ring norm-ratio trend over growing scales, measured at fixed depth.
    if (level >= 4) {
        RingFieldSpec spec;
        spec.alpha = 0.4;
        spec.grid_level = level;
        const UnitGridField field = generate_ring(spec);
        const int depth = level - 1;
        const int n_max = std::min(6, level - 2);
        std::vector<double> ratios;
        for (int n = 2; n <= n_max; ++n) {
            const Decomposition dec =
                decompose(field, Nonlinearity::exp_decay(0.2), ScaleRange{n, n}, false);
            const ResidualReport rr = residual_report(dec, spec.alpha, depth, depth);
            ratios.push_back(rr.norm_ratio);
            push(report, "residual", "ring_ratio_finite_N" + std::to_string(n), rr.norm_ratio,
                 0.0, std::isfinite(rr.norm_ratio) && rr.ratio_applicable);
        }
        if (ratios.size() >= 2) {
            push_le(report, "residual", "ring_ratio_growth", ratios.back(),
                    1.10 * ratios.front());
        }
    }
}

} // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

bool is_known_suite(const std::string& suite) {
    return suite == "parseval" || suite == "telescope" || suite == "ftc" || suite == "decay" ||
           suite == "residual" || suite == "all";
}

VerifyReport run_verify(const std::string& suite, int size, std::uint64_t seed, int quad_order) {
    if (!is_known_suite(suite)) throw std::domain_error("unknown suite: " + suite);
    VerifyReport report;
    const bool all = suite == "all";
    if (all || suite == "parseval") suite_parseval(report, size, seed);
    if (all || suite == "telescope") suite_telescope(report, size, seed);
    if (all || suite == "ftc") suite_ftc(report, std::min(size, 16), seed, quad_order);
    if (all || suite == "decay") suite_decay(report, size, seed);
    if (all || suite == "residual") suite_residual(report, size, seed);
    return report;
}

void print_verify(const VerifyReport& report, std::ostream& out) {
    for (const CheckResult& c : report.checks) {
        out << (c.pass ? "[pass] " : "[FAIL] ") << c.suite << '.' << c.name
            << "  value=" << format_double(c.value) << "  threshold=" << format_double(c.threshold)
            << '\n';
    }
    out << (report.all_pass() ? "all checks passed\n" : "SOME CHECKS FAILED\n");
}

void write_verify_csv(const VerifyReport& report, std::ostream& out) {
    out << "suite,check,value,threshold,pass\n";
    for (const CheckResult& c : report.checks) {
        out << c.suite << ',' << c.name << ',' << format_double(c.value) << ','
            << format_double(c.threshold) << ',' << (c.pass ? 1 : 0) << '\n';
    }
}

} // namespace tenpara
