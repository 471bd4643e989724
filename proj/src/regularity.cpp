#include "tenpara/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

namespace tenpara {

namespace {

constexpr std::array<OperatorKind, 4> kAllKinds = {
    OperatorKind::ScalingScaling,
    OperatorKind::ScalingWavelet,
    OperatorKind::WaveletScaling,
    OperatorKind::WaveletWavelet,
};

DecayFit fit_diagonals(const std::vector<std::pair<int, double>>& points) {
    DecayFit fit;
    if (points.size() < 2) return fit;
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (const auto& [s, log_sup] : points) {
        sx += s;
        sy += log_sup;
        sxx += static_cast<double>(s) * s;
        sxy += s * log_sup;
        syy += log_sup * log_sup;
    }
    const double n = static_cast<double>(points.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return fit;
    fit.valid = true;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept_log2 = (sy - fit.slope * sx) / n;
    const double ss_tot = syy - sy * sy / n;
    double ss_res = 0.0;
    for (const auto& [s, log_sup] : points) {
        const double e = log_sup - (fit.slope * s + fit.intercept_log2);
        ss_res += e * e;
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

} // namespace

double DecayReport::sup(OperatorKind kind, int j, int jp) const {
    if (j < 0 || j > max_level_x || jp < 0 || jp > max_level_y) {
        throw LevelError("report level pair out of range");
    }
    return sup_abs[static_cast<int>(kind)][static_cast<std::size_t>(j) * (max_level_y + 1) + jp];
}

DecayReport decay_report(const TensorCoeffPyramid& pyramid) {
    if (pyramid.empty()) throw std::domain_error("pyramid is empty");
    DecayReport report;
    report.max_level_x = pyramid.max_level_x();
    report.max_level_y = pyramid.max_level_y();
    const std::size_t pairs = static_cast<std::size_t>(report.max_level_x + 1) *
                              static_cast<std::size_t>(report.max_level_y + 1);
    for (OperatorKind kind : kAllKinds) {
        auto& sup = report.sup_abs[static_cast<int>(kind)];
        sup.assign(pairs, 0.0);
        for (int j = 0; j <= report.max_level_x; ++j) {
            for (int jp = 0; jp <= report.max_level_y; ++jp) {
                double m = 0.0;
                for (double v : pyramid.block(kind, j, jp)) m = std::max(m, std::abs(v));
                sup[static_cast<std::size_t>(j) * (report.max_level_y + 1) + jp] = m;
            }
        }
    }

    // Diagonal max-aggregation of the wavelet x wavelet family, then OLS on
    // (j+j', log2 sup) over nonzero entries.
    std::vector<double> diag(report.max_level_x + report.max_level_y + 1, 0.0);
    for (int j = 0; j <= report.max_level_x; ++j) {
        for (int jp = 0; jp <= report.max_level_y; ++jp) {
            diag[j + jp] = std::max(diag[j + jp], report.sup(OperatorKind::WaveletWavelet, j, jp));
        }
    }
    std::vector<std::pair<int, double>> points;
    for (int s = 0; s < static_cast<int>(diag.size()); ++s) {
        if (diag[s] > 0.0) points.emplace_back(s, std::log2(diag[s]));
    }
    report.all_zero = points.empty();
    report.fit = fit_diagonals(points);
    if (report.all_zero) {
        report.fit.slope = std::numeric_limits<double>::infinity();
    }
    return report;
}

double mixed_holder_norm(const TensorCoeffPyramid& pyramid, double alpha, double offset) {
    if (pyramid.empty()) throw std::domain_error("pyramid is empty");
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    if (!(offset > 0.0)) throw std::domain_error("offset must be positive");
    double norm = 0.0;
    for (int j = 0; j <= pyramid.max_level_x(); ++j) {
        for (int jp = 0; jp <= pyramid.max_level_y(); ++jp) {
            const double inv_weight = std::exp2((j + jp) * (alpha + offset));
            for (double v : pyramid.block(OperatorKind::WaveletWavelet, j, jp)) {
                norm = std::max(norm, std::abs(v) * inv_weight);
            }
        }
    }
    return norm;
}

double direct_mixed_holder_quotients(const UnitGridField& field, double alpha,
                                     std::int64_t sample_count) {
    if (sample_count < 1) throw std::domain_error("sample_count must be >= 1");
    const std::int64_t rows = field.rows();
    const std::int64_t cols = field.cols();
    const double hx = std::ldexp(1.0, -field.level_x());
    const double hy = std::ldexp(1.0, -field.level_y());

    // All index pairs along an axis, strided down to at most `cap` of them.
    auto strided_pairs = [](std::int64_t n, std::int64_t cap) {
        std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
        const std::int64_t total = n * (n - 1) / 2;
        const std::int64_t stride = std::max<std::int64_t>(1, (total + cap - 1) / cap);
        std::int64_t ticker = 0;
        for (std::int64_t a = 0; a < n; ++a) {
            for (std::int64_t b = a + 1; b < n; ++b) {
                if (ticker % stride == 0) pairs.emplace_back(a, b);
                ++ticker;
            }
        }
        return pairs;
    };
    const std::int64_t cap =
        std::max<std::int64_t>(1, static_cast<std::int64_t>(std::sqrt(double(sample_count))));
    const auto x_pairs = strided_pairs(rows, cap);
    const auto y_pairs = strided_pairs(cols, cap);

    auto center_x = [&](std::int64_t r) { return (static_cast<double>(r) + 0.5) * hx; };
    auto center_y = [&](std::int64_t c) { return (static_cast<double>(c) + 0.5) * hy; };

    double worst = 0.0;
    // Mixed second-difference quotient over sampled rectangles.
    for (const auto& [r1, r2] : x_pairs) {
        const double ddx = dyadic_distance(center_x(r1), center_x(r2));
        if (ddx == 0.0) continue;
        const double wx = std::pow(ddx, alpha);
        for (const auto& [c1, c2] : y_pairs) {
            const double ddy = dyadic_distance(center_y(c1), center_y(c2));
            if (ddy == 0.0) continue;
            const double mixed = field.at(r1, c1) - field.at(r2, c1) - field.at(r1, c2) +
                                 field.at(r2, c2);
            worst = std::max(worst, std::abs(mixed) / (wx * std::pow(ddy, alpha)));
        }
    }
    // Single-axis quotients.
    const std::int64_t col_stride = std::max<std::int64_t>(1, cols / cap);
    for (const auto& [r1, r2] : x_pairs) {
        const double ddx = dyadic_distance(center_x(r1), center_x(r2));
        if (ddx == 0.0) continue;
        const double wx = std::pow(ddx, alpha);
        for (std::int64_t c = 0; c < cols; c += col_stride) {
            worst = std::max(worst, std::abs(field.at(r1, c) - field.at(r2, c)) / wx);
        }
    }
    const std::int64_t row_stride = std::max<std::int64_t>(1, rows / cap);
    for (const auto& [c1, c2] : y_pairs) {
        const double ddy = dyadic_distance(center_y(c1), center_y(c2));
        if (ddy == 0.0) continue;
        const double wy = std::pow(ddy, alpha);
        for (std::int64_t r = 0; r < rows; r += row_stride) {
            worst = std::max(worst, std::abs(field.at(r, c1) - field.at(r, c2)) / wy);
        }
    }
    return worst;
}

BoundCheckResult check_decay_bound(const DecayReport& report, double rate, double c_constant) {
    if (!(rate > 0.0)) throw std::domain_error("rate must be positive");
    if (!(c_constant > 0.0)) throw std::domain_error("constant must be positive");
    BoundCheckResult result;
    for (int j = 0; j <= report.max_level_x; ++j) {
        for (int jp = 0; jp <= report.max_level_y; ++jp) {
            const double bound = c_constant * std::exp2(-(j + jp) * rate);
            const double sup = report.sup(OperatorKind::WaveletWavelet, j, jp);
            const double ratio = sup / bound;
            // Relative slack absorbs the rounding of the two exp2 evaluations
            // when C is itself the measured norm (exact-equality case).
            if (ratio > 1.0 + 1e-9 && ratio > result.ratio) {
                result.ok = false;
                result.witness_j = j;
                result.witness_jp = jp;
                result.ratio = ratio;
            }
        }
    }
    return result;
}

HolderEstimate estimate_alpha(const DecayReport& report, double offset) {
    if (report.all_zero) throw std::domain_error("estimate undefined: all coefficients are zero");
    if (!report.fit.valid) {
        throw std::domain_error("estimate undefined: fewer than two nonzero level pairs");
    }
    HolderEstimate est;
    est.exponent_offset = offset;
    est.alpha_hat = -report.fit.slope - offset;
    double norm = 0.0;
    for (int j = 0; j <= report.max_level_x; ++j) {
        for (int jp = 0; jp <= report.max_level_y; ++jp) {
            norm = std::max(norm, report.sup(OperatorKind::WaveletWavelet, j, jp) *
                                      std::exp2((j + jp) * (est.alpha_hat + offset)));
        }
    }
    est.norm_value = norm;
    return est;
}

void write_decay_csv(const DecayReport& report, std::ostream& out) {
    out << "j,jprime,family,sup_abs\n";
    char buf[64];
    for (OperatorKind kind : kAllKinds) {
        for (int j = 0; j <= report.max_level_x; ++j) {
            for (int jp = 0; jp <= report.max_level_y; ++jp) {
                std::snprintf(buf, sizeof buf, "%.17g", report.sup(kind, j, jp));
                out << j << ',' << jp << ',' << operator_kind_name(kind) << ',' << buf << '\n';
            }
        }
    }
    out << "slope,intercept_log2,r_squared,all_zero\n";
    std::snprintf(buf, sizeof buf, "%.17g", report.fit.slope);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", report.fit.intercept_log2);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.17g", report.fit.r_squared);
    out << buf << ',' << (report.all_zero ? 1 : 0) << '\n';
}

} // namespace tenpara
