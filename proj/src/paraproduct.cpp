#include "tenpara/paraproduct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace tenpara {

namespace {

void require_scales(const UnitGridField& field, ScaleRange scales) {
    if (scales.n_x < 0 || scales.n_y < 0) throw LevelError("scales must be non-negative");
    if (scales.n_x + 1 > field.level_x() || scales.n_y + 1 > field.level_y()) {
        throw LevelError("scales need N + 1 <= field level on each axis");
    }
}

// Per-cell compensated accumulator for the (j,j') double sums.
class FieldAccumulator {
public:
    explicit FieldAccumulator(const UnitGridField& shape)
        : sum_(shape.level_x(), shape.level_y()), comp_(shape.level_x(), shape.level_y()) {}

    void add(const UnitGridField& term) {
        auto& s = sum_.values();
        auto& c = comp_.values();
        const auto& t = term.values();
        for (std::size_t i = 0; i < s.size(); ++i) {
            const double y = t[i] - c[i];
            const double next = s[i] + y;
            c[i] = (next - s[i]) - y;
            s[i] = next;
        }
    }

    UnitGridField take() { return std::move(sum_); }

private:
    UnitGridField sum_;
    UnitGridField comp_;
};

UnitGridField mixed_difference(const UnitGridField& pp11, const UnitGridField& pp01,
                               const UnitGridField& pp10, const UnitGridField& pp00) {
    UnitGridField out(pp11.level_x(), pp11.level_y());
    const auto& a = pp11.values();
    const auto& b = pp01.values();
    const auto& c = pp10.values();
    const auto& d = pp00.values();
    auto& o = out.values();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = a[i] - b[i] - c[i] + d[i];
    return out;
}

// Caches P^j along rows for j in [0, N+1] and serves the four corner fields
// P^j P'^j', P^(j+1) P'^j', P^j P'^(j'+1), P^(j+1) P'^(j'+1) per (j,j').
class ScaleCornerCache {
public:
    ScaleCornerCache(const UnitGridField& field, ScaleRange scales) : scales_(scales) {
        row_proj_.reserve(scales.n_x + 2);
        for (int j = 0; j <= scales.n_x + 1; ++j) row_proj_.push_back(project_rows(field, j));
    }

    // corner(j, j') = P^j P'^j' f for j in [0, N+1], j' in [0, N'+1].
    UnitGridField corner(int j, int jp) const { return project_cols(row_proj_[j], jp); }

    ScaleRange scales() const { return scales_; }

private:
    ScaleRange scales_;
    std::vector<UnitGridField> row_proj_;
};

} // namespace

UnitGridField TelescopeResult::collapse() const {
    UnitGridField out = subtract(corner_fine, corner_coarse_x);
    out = subtract(out, corner_coarse_y);
    return add(out, corner_mean);
}

ApproxResult paraproduct_approx(const UnitGridField& field, const Nonlinearity& map,
                                ScaleRange scales, bool keep_terms) {
    require_scales(field, scales);
    ScaleCornerCache cache(field, scales);
    FieldAccumulator acc(field);
    ApproxResult result;
    if (keep_terms) {
        result.terms.reserve(static_cast<std::size_t>(scales.n_x + 1) * (scales.n_y + 1));
    }
    for (int j = 0; j <= scales.n_x; ++j) {
        UnitGridField pp00 = cache.corner(j, 0);
        UnitGridField pp10 = cache.corner(j + 1, 0);
        for (int jp = 0; jp <= scales.n_y; ++jp) {
            UnitGridField pp01 = cache.corner(j, jp + 1);
            UnitGridField pp11 = cache.corner(j + 1, jp + 1);

            const UnitGridField qq = mixed_difference(pp11, pp01, pp10, pp00);
            const UnitGridField qp = subtract(pp10, pp00);
            const UnitGridField pq = subtract(pp01, pp00);

            UnitGridField first = hadamard(evaluate_nonlinearity(map, pp00, 1), qq);
            UnitGridField second =
                hadamard(evaluate_nonlinearity(map, pp00, 2), hadamard(qp, pq));
            acc.add(first);
            acc.add(second);
            if (keep_terms) {
                result.terms.push_back(ScaleTerm{j, jp, std::move(first), std::move(second)});
            }
            pp00 = std::move(pp01);
            pp10 = std::move(pp11);
        }
    }
    result.approx = acc.take();
    return result;
}

Decomposition decompose(const UnitGridField& field, const Nonlinearity& map, ScaleRange scales,
                        bool keep_terms) {
    require_scales(field, scales);
    Decomposition dec;
    dec.input = field;
    dec.scales = scales;
    dec.nonlinearity_name = map.name();
    dec.nonlinear = evaluate_nonlinearity(map, field, 0);

    ApproxResult approx = paraproduct_approx(field, map, scales, keep_terms);
    dec.approx = std::move(approx.approx);
    dec.terms = std::move(approx.terms);
    dec.residual = subtract(dec.nonlinear, dec.approx);

    const UnitGridField coarse_rows = project_rows(field, 0);
    const UnitGridField fine_rows = project_rows(field, scales.n_x + 1);
    dec.boundary_coarse_x =
        evaluate_nonlinearity(map, project_cols(coarse_rows, scales.n_y + 1), 0);
    dec.boundary_coarse_y = evaluate_nonlinearity(map, project_cols(fine_rows, 0), 0);
    dec.boundary_mean = evaluate_nonlinearity(map, project_cols(coarse_rows, 0), 0);
    return dec;
}

TelescopeResult telescoping_mixed_sum(const UnitGridField& field, const Nonlinearity& map,
                                      ScaleRange scales) {
    require_scales(field, scales);
    ScaleCornerCache cache(field, scales);
    FieldAccumulator acc(field);
    for (int j = 0; j <= scales.n_x; ++j) {
        UnitGridField a00 = evaluate_nonlinearity(map, cache.corner(j, 0), 0);
        UnitGridField a10 = evaluate_nonlinearity(map, cache.corner(j + 1, 0), 0);
        for (int jp = 0; jp <= scales.n_y; ++jp) {
            UnitGridField a01 = evaluate_nonlinearity(map, cache.corner(j, jp + 1), 0);
            UnitGridField a11 = evaluate_nonlinearity(map, cache.corner(j + 1, jp + 1), 0);
            acc.add(mixed_difference(a11, a01, a10, a00));
            a00 = std::move(a01);
            a10 = std::move(a11);
        }
    }
    TelescopeResult result;
    result.sum = acc.take();
    result.corner_fine =
        evaluate_nonlinearity(map, cache.corner(scales.n_x + 1, scales.n_y + 1), 0);
    result.corner_coarse_x = evaluate_nonlinearity(map, cache.corner(0, scales.n_y + 1), 0);
    result.corner_coarse_y = evaluate_nonlinearity(map, cache.corner(scales.n_x + 1, 0), 0);
    result.corner_mean = evaluate_nonlinearity(map, cache.corner(0, 0), 0);
    result.collapse_error = max_abs_diff(result.sum, result.collapse());
    const double tol = 1e-12 * std::max(1.0, max_abs(result.sum));
    if (result.collapse_error > tol) {
        throw EvalError("telescoping collapse identity violated: max error " +
                        std::to_string(result.collapse_error));
    }
    return result;
}

UnitGridField bilinear_interp_h(const UnitGridField& field, int j, int jp, double mu,
                                double omega) {
    if (!(mu >= 0.0 && mu <= 1.0) || !(omega >= 0.0 && omega <= 1.0)) {
        throw std::domain_error("interpolation parameters must lie in [0,1]");
    }
    if (j < 0 || j + 1 > field.level_x() || jp < 0 || jp + 1 > field.level_y()) {
        throw LevelError("interpolation scales out of range for field resolution");
    }
    const UnitGridField qq = apply_operator(field, j, jp, OperatorKind::WaveletWavelet);
    const UnitGridField qp = apply_operator(field, j, jp, OperatorKind::WaveletScaling);
    const UnitGridField pq = apply_operator(field, j, jp, OperatorKind::ScalingWavelet);
    UnitGridField h(field.level_x(), field.level_y());
    for (std::size_t i = 0; i < h.values().size(); ++i) {
        h.values()[i] = omega * qp.values()[i] + mu * pq.values()[i] +
                        mu * omega * qq.values()[i];
    }
    return h;
}

void gauss_legendre_unit(int order, std::vector<double>& nodes, std::vector<double>& weights) {
    if (order < 1) throw std::domain_error("quadrature order must be >= 1");
    nodes.assign(order, 0.0);
    weights.assign(order, 0.0);
    // Newton iteration on P_n over [-1,1], then map to [0,1].
    for (int i = 0; i < (order + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= order; ++n) {
                const double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = 0.5 * (1.0 - x);
        nodes[order - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[order - 1 - i] = 0.5 * w;
    }
}

UnitGridField residual_integral_form(const UnitGridField& field, const Nonlinearity& map,
                                     ScaleRange scales, int quad_order) {
    require_scales(field, scales);
    if (quad_order < 2) throw std::domain_error("quadrature order must be >= 2");
    std::vector<double> nodes, weights;
    gauss_legendre_unit(quad_order, nodes, weights);

    ScaleCornerCache cache(field, scales);
    FieldAccumulator acc(field);
    const std::size_t cells = field.values().size();
    UnitGridField integrand(field.level_x(), field.level_y());
    for (int j = 0; j <= scales.n_x; ++j) {
        UnitGridField pp00 = cache.corner(j, 0);
        UnitGridField pp10 = cache.corner(j + 1, 0);
        for (int jp = 0; jp <= scales.n_y; ++jp) {
            UnitGridField pp01 = cache.corner(j, jp + 1);
            UnitGridField pp11 = cache.corner(j + 1, jp + 1);
            const UnitGridField qq = mixed_difference(pp11, pp01, pp10, pp00);
            const UnitGridField qp = subtract(pp10, pp00);
            const UnitGridField pq = subtract(pp01, pp00);

            // mu/omega independent part: A'(PP) v1 + A''(PP) vtilde2.
            const UnitGridField d1_base = evaluate_nonlinearity(map, pp00, 1);
            const UnitGridField d2_base = evaluate_nonlinearity(map, pp00, 2);

            std::vector<double>& out = integrand.values();
            std::fill(out.begin(), out.end(), 0.0);
            for (int a = 0; a < quad_order; ++a) {
                const double mu = nodes[a];
                for (int b = 0; b < quad_order; ++b) {
                    const double omega = nodes[b];
                    const double w = weights[a] * weights[b];
                    for (std::size_t i = 0; i < cells; ++i) {
                        const double qq_i = qq.values()[i];
                        const double h = omega * qp.values()[i] + mu * pq.values()[i] +
                                         mu * omega * qq_i;
                        const double shifted = pp00.values()[i] + h;
                        const double v2 = (pq.values()[i] + omega * qq_i) *
                                          (qp.values()[i] + mu * qq_i);
                        double term = map.d1(shifted) * qq_i + map.d2(shifted) * v2;
                        if (!std::isfinite(term)) {
                            throw EvalError("non-finite integrand at scales (" +
                                            std::to_string(j) + "," + std::to_string(jp) + ")");
                        }
                        out[i] += w * term;
                    }
                }
            }
            for (std::size_t i = 0; i < cells; ++i) {
                out[i] -= d1_base.values()[i] * qq.values()[i] +
                          d2_base.values()[i] * qp.values()[i] * pq.values()[i];
            }
            acc.add(integrand);
            pp00 = std::move(pp01);
            pp10 = std::move(pp11);
        }
    }
    return acc.take();
}

ResidualReport residual_report(const Decomposition& dec, double alpha, int analysis_level_x,
                               int analysis_level_y) {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    ResidualReport report;
    report.alpha = alpha;
    report.alpha_above_half = alpha > 0.5;
    report.analysis_level_x = analysis_level_x < 0 ? dec.scales.n_x : analysis_level_x;
    report.analysis_level_y = analysis_level_y < 0 ? dec.scales.n_y : analysis_level_y;

    const TensorCoeffPyramid residual_pyramid =
        tensor_analyze(dec.residual, report.analysis_level_x, report.analysis_level_y);
    const TensorCoeffPyramid input_pyramid =
        tensor_analyze(dec.input, report.analysis_level_x, report.analysis_level_y);

    report.residual_decay = decay_report(residual_pyramid);
    report.residual_linf = max_abs(dec.residual);
    report.input_norm_alpha = mixed_holder_norm(input_pyramid, alpha, 0.5);
    report.residual_norm_2alpha = mixed_holder_norm(residual_pyramid, 2.0 * alpha, 0.5);
    report.residual_norm_2alpha_1 = mixed_holder_norm(residual_pyramid, 2.0 * alpha, 1.0);
    report.ratio_applicable = report.input_norm_alpha > 0.0;
    report.norm_ratio =
        report.ratio_applicable ? report.residual_norm_2alpha / report.input_norm_alpha : 0.0;
    if (report.residual_norm_2alpha > 0.0) {
        report.bound_half =
            check_decay_bound(report.residual_decay, 2.0 * alpha + 0.5, report.residual_norm_2alpha);
    }
    if (report.residual_norm_2alpha_1 > 0.0) {
        report.bound_one =
            check_decay_bound(report.residual_decay, 2.0 * alpha + 1.0, report.residual_norm_2alpha_1);
    }
    return report;
}

void write_residual_report_csv(const ResidualReport& report, std::ostream& out) {
    char buf[64];
    auto emit = [&](const char* key, double value) {
        std::snprintf(buf, sizeof buf, "%.17g", value);
        out << key << ',' << buf << '\n';
    };
    out << "key,value\n";
    emit("alpha", report.alpha);
    out << "alpha_above_half," << (report.alpha_above_half ? 1 : 0) << '\n';
    out << "analysis_level_x," << report.analysis_level_x << '\n';
    out << "analysis_level_y," << report.analysis_level_y << '\n';
    emit("residual_linf", report.residual_linf);
    emit("input_norm_alpha_offset_half", report.input_norm_alpha);
    emit("residual_norm_2alpha_offset_half", report.residual_norm_2alpha);
    emit("residual_norm_2alpha_offset_one", report.residual_norm_2alpha_1);
    out << "norm_ratio_applicable," << (report.ratio_applicable ? 1 : 0) << '\n';
    emit("norm_ratio", report.norm_ratio);
    emit("decay_slope", report.residual_decay.fit.slope);
    emit("decay_intercept_log2", report.residual_decay.fit.intercept_log2);
    emit("decay_r_squared", report.residual_decay.fit.r_squared);
    out << "bound_rate_2alpha_half_ok," << (report.bound_half.ok ? 1 : 0) << '\n';
    out << "bound_rate_2alpha_one_ok," << (report.bound_one.ok ? 1 : 0) << '\n';
}

} // namespace tenpara
