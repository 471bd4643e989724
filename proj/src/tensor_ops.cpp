#include "tenpara/tensor_ops.hpp"

#include <cmath>

#include "tenpara/wavelet1d.hpp"

namespace tenpara {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

int family_index(OperatorKind kind) { return static_cast<int>(kind); }

} // namespace

const char* operator_kind_name(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::ScalingScaling: return "scaling_scaling";
        case OperatorKind::ScalingWavelet: return "scaling_wavelet";
        case OperatorKind::WaveletScaling: return "wavelet_scaling";
        case OperatorKind::WaveletWavelet: return "wavelet_wavelet";
    }
    return "unknown";
}

OperatorKind operator_kind_from_name(const std::string& name) {
    if (name == "scaling_scaling") return OperatorKind::ScalingScaling;
    if (name == "scaling_wavelet") return OperatorKind::ScalingWavelet;
    if (name == "wavelet_scaling") return OperatorKind::WaveletScaling;
    if (name == "wavelet_wavelet") return OperatorKind::WaveletWavelet;
    throw std::domain_error("unknown operator kind: " + name);
}

TensorCoeffPyramid::TensorCoeffPyramid(int max_level_x, int max_level_y)
    : max_level_x_(max_level_x), max_level_y_(max_level_y) {
    if (max_level_x < 0 || max_level_y < 0) {
        throw LevelError("pyramid levels must be non-negative");
    }
    const std::size_t pairs =
        static_cast<std::size_t>(max_level_x + 1) * static_cast<std::size_t>(max_level_y + 1);
    for (auto& family : families_) {
        family.resize(pairs);
        for (int j = 0; j <= max_level_x; ++j) {
            for (int jp = 0; jp <= max_level_y; ++jp) {
                family[static_cast<std::size_t>(j) * (max_level_y + 1) + jp].assign(
                    std::size_t{1} << (j + jp), 0.0);
            }
        }
    }
}

std::vector<double>& TensorCoeffPyramid::block(OperatorKind kind, int j, int jp) {
    return const_cast<std::vector<double>&>(
        static_cast<const TensorCoeffPyramid*>(this)->block(kind, j, jp));
}

const std::vector<double>& TensorCoeffPyramid::block(OperatorKind kind, int j, int jp) const {
    if (empty()) throw std::domain_error("pyramid is empty");
    if (j < 0 || j > max_level_x_ || jp < 0 || jp > max_level_y_) {
        throw LevelError("pyramid level pair out of range");
    }
    return families_[family_index(kind)][static_cast<std::size_t>(j) * (max_level_y_ + 1) + jp];
}

TensorCoeffPyramid tensor_analyze(const UnitGridField& field, int max_level_x, int max_level_y) {
    const int lx = field.level_x();
    const int ly = field.level_y();
    if (max_level_x < 0 || max_level_x + 1 > lx || max_level_y < 0 || max_level_y + 1 > ly) {
        throw LevelError("pyramid levels need max_level + 1 <= field level on each axis");
    }
    TensorCoeffPyramid pyramid(max_level_x, max_level_y);

    const std::int64_t rows = field.rows();
    const std::int64_t cols = field.cols();

    // Pass 1: Haar cascade along y for every row; keep levels 0..max_level_y.
    // y_scal[jp] and y_det[jp] are rows x 2^jp matrices.
    std::vector<std::vector<double>> y_scal(max_level_y + 1), y_det(max_level_y + 1);
    for (int jp = 0; jp <= max_level_y; ++jp) {
        y_scal[jp].resize(static_cast<std::size_t>(rows) << jp);
        y_det[jp].resize(static_cast<std::size_t>(rows) << jp);
    }
    {
        const double root_hy = std::sqrt(std::ldexp(1.0, -ly));
        std::vector<double> buf(cols), next(cols);
        for (std::int64_t r = 0; r < rows; ++r) {
            for (std::int64_t c = 0; c < cols; ++c) buf[c] = field.at(r, c) * root_hy;
            for (int jp = ly - 1; jp >= 0; --jp) {
                const std::int64_t count = std::int64_t{1} << jp;
                for (std::int64_t k = 0; k < count; ++k) {
                    const double a = buf[2 * k];
                    const double b = buf[2 * k + 1];
                    next[k] = (a + b) * kInvSqrt2;
                    const double d = (a - b) * kInvSqrt2;
                    if (jp <= max_level_y) y_det[jp][(r << jp) + k] = d;
                }
                for (std::int64_t k = 0; k < count; ++k) buf[k] = next[k];
                if (jp <= max_level_y) {
                    for (std::int64_t k = 0; k < count; ++k) y_scal[jp][(r << jp) + k] = buf[k];
                }
            }
        }
    }

    // Pass 2: cascade along x for each (jp, kp) column of both intermediates.
    const double root_hx = std::sqrt(std::ldexp(1.0, -lx));
    std::vector<double> buf(rows), det(rows);
    for (int jp = 0; jp <= max_level_y; ++jp) {
        const std::int64_t kp_count = std::int64_t{1} << jp;
        for (std::int64_t kp = 0; kp < kp_count; ++kp) {
            for (int pass = 0; pass < 2; ++pass) {
                const std::vector<double>& column_src = pass == 0 ? y_scal[jp] : y_det[jp];
                const OperatorKind scal_kind =
                    pass == 0 ? OperatorKind::ScalingScaling : OperatorKind::ScalingWavelet;
                const OperatorKind det_kind =
                    pass == 0 ? OperatorKind::WaveletScaling : OperatorKind::WaveletWavelet;
                for (std::int64_t r = 0; r < rows; ++r) {
                    buf[r] = column_src[(r << jp) + kp] * root_hx;
                }
                for (int j = lx - 1; j >= 0; --j) {
                    const std::int64_t count = std::int64_t{1} << j;
                    for (std::int64_t k = 0; k < count; ++k) {
                        const double a = buf[2 * k];
                        const double b = buf[2 * k + 1];
                        det[k] = (a - b) * kInvSqrt2;
                        buf[k] = (a + b) * kInvSqrt2;
                    }
                    if (j <= max_level_x) {
                        auto& scal_block = pyramid.block(scal_kind, j, jp);
                        auto& det_block = pyramid.block(det_kind, j, jp);
                        for (std::int64_t k = 0; k < count; ++k) {
                            scal_block[(k << jp) + kp] = buf[k];
                            det_block[(k << jp) + kp] = det[k];
                        }
                    }
                }
            }
        }
    }
    return pyramid;
}

UnitGridField tensor_synthesize(const TensorCoeffPyramid& pyramid, int level_x, int level_y) {
    if (pyramid.empty()) throw std::domain_error("pyramid is empty");
    if (pyramid.max_level_x() != level_x - 1 || pyramid.max_level_y() != level_y - 1) {
        throw ShapeError("synthesis needs a full-depth pyramid (max_level = level - 1)");
    }
    const std::int64_t rows = std::int64_t{1} << level_x;

    // Reconstruct, per (j',k'), the x-profile of <f(x,.), psi^j'_k'> from its
    // x-expansion {omega_sw(0,j'), alpha(.,j')}, and the x-profile of
    // <f(x,.), phi^0_0> from {eta(0,0), omega_ws(.,0)}.
    auto synth_column = [&](double c00, int jp, std::int64_t kp, bool from_alpha) {
        CoeffPyramid1D p;
        p.max_level = level_x - 1;
        p.scaling.assign(level_x, {});
        p.detail.assign(level_x, {});
        p.scaling[0] = {c00};
        for (int j = 0; j < level_x; ++j) {
            const std::int64_t count = std::int64_t{1} << j;
            p.detail[j].resize(count);
            const OperatorKind kind =
                from_alpha ? OperatorKind::WaveletWavelet : OperatorKind::WaveletScaling;
            const auto& blk = pyramid.block(kind, j, jp);
            for (std::int64_t k = 0; k < count; ++k) p.detail[j][k] = blk[(k << jp) + kp];
        }
        return synthesize_1d(p, level_x);
    };

    const std::vector<double> mean_profile =
        synth_column(pyramid.at(OperatorKind::ScalingScaling, 0, 0, 0, 0), 0, 0, false);

    std::vector<std::vector<double>> det_profiles(level_y);
    for (int jp = 0; jp < level_y; ++jp) {
        const std::int64_t kp_count = std::int64_t{1} << jp;
        det_profiles[jp].resize(static_cast<std::size_t>(rows) << jp);
        for (std::int64_t kp = 0; kp < kp_count; ++kp) {
            const std::vector<double> col =
                synth_column(pyramid.at(OperatorKind::ScalingWavelet, 0, jp, 0, kp), jp, kp, true);
            for (std::int64_t r = 0; r < rows; ++r) det_profiles[jp][(r << jp) + kp] = col[r];
        }
    }

    // y-synthesis row by row: the x-profiles evaluated at cell r are exactly the
    // y-coefficients <f(x_r,.), phi^0> and <f(x_r,.), psi^j'_k'>.
    UnitGridField field(level_x, level_y);
    for (std::int64_t r = 0; r < rows; ++r) {
        CoeffPyramid1D p;
        p.max_level = level_y - 1;
        p.scaling.assign(level_y, {});
        p.detail.assign(level_y, {});
        p.scaling[0] = {mean_profile[r]};
        for (int jp = 0; jp < level_y; ++jp) {
            const std::int64_t count = std::int64_t{1} << jp;
            p.detail[jp].resize(count);
            for (std::int64_t kp = 0; kp < count; ++kp) {
                p.detail[jp][kp] = det_profiles[jp][(r << jp) + kp];
            }
        }
        const std::vector<double> row = synthesize_1d(p, level_y);
        for (std::int64_t c = 0; c < field.cols(); ++c) field.at(r, c) = row[c];
    }
    return field;
}

UnitGridField project_rows(const UnitGridField& field, int j) {
    const int lx = field.level_x();
    if (j < 0 || j > lx) throw LevelError("row projection level out of range");
    const std::int64_t cols = field.cols();
    const std::int64_t block = std::int64_t{1} << (lx - j);
    UnitGridField out(field.level_x(), field.level_y());
    std::vector<double> tmp(block);
    for (std::int64_t c = 0; c < cols; ++c) {
        for (std::int64_t start = 0; start < field.rows(); start += block) {
            for (std::int64_t i = 0; i < block; ++i) tmp[i] = field.at(start + i, c);
            for (std::int64_t m = block; m > 1; m /= 2) {
                for (std::int64_t i = 0; i < m / 2; ++i) {
                    tmp[i] = 0.5 * (tmp[2 * i] + tmp[2 * i + 1]);
                }
            }
            for (std::int64_t i = 0; i < block; ++i) out.at(start + i, c) = tmp[0];
        }
    }
    return out;
}

UnitGridField project_cols(const UnitGridField& field, int jp) {
    const int ly = field.level_y();
    if (jp < 0 || jp > ly) throw LevelError("column projection level out of range");
    const std::int64_t block = std::int64_t{1} << (ly - jp);
    UnitGridField out(field.level_x(), field.level_y());
    std::vector<double> tmp(block);
    for (std::int64_t r = 0; r < field.rows(); ++r) {
        for (std::int64_t start = 0; start < field.cols(); start += block) {
            for (std::int64_t i = 0; i < block; ++i) tmp[i] = field.at(r, start + i);
            for (std::int64_t m = block; m > 1; m /= 2) {
                for (std::int64_t i = 0; i < m / 2; ++i) {
                    tmp[i] = 0.5 * (tmp[2 * i] + tmp[2 * i + 1]);
                }
            }
            for (std::int64_t i = 0; i < block; ++i) out.at(r, start + i) = tmp[0];
        }
    }
    return out;
}

UnitGridField apply_operator(const UnitGridField& field, int j, int jp, OperatorKind kind) {
    const bool wavelet_x =
        kind == OperatorKind::WaveletScaling || kind == OperatorKind::WaveletWavelet;
    const bool wavelet_y =
        kind == OperatorKind::ScalingWavelet || kind == OperatorKind::WaveletWavelet;
    if (j < 0 || j + (wavelet_x ? 1 : 0) > field.level_x() || jp < 0 ||
        jp + (wavelet_y ? 1 : 0) > field.level_y()) {
        throw LevelError("operator levels out of range for field resolution");
    }
    switch (kind) {
        case OperatorKind::ScalingScaling:
            return project_cols(project_rows(field, j), jp);
        case OperatorKind::WaveletScaling: {
            const UnitGridField coarse = project_rows(field, j);
            const UnitGridField fine = project_rows(field, j + 1);
            return project_cols(subtract(fine, coarse), jp);
        }
        case OperatorKind::ScalingWavelet: {
            const UnitGridField base = project_rows(field, j);
            return subtract(project_cols(base, jp + 1), project_cols(base, jp));
        }
        case OperatorKind::WaveletWavelet: {
            const UnitGridField coarse = project_rows(field, j);
            const UnitGridField fine = project_rows(field, j + 1);
            const UnitGridField diff = subtract(fine, coarse);
            return subtract(project_cols(diff, jp + 1), project_cols(diff, jp));
        }
    }
    throw std::domain_error("unknown operator kind");
}

double field_l2_norm_sq(const UnitGridField& field) {
    const double cell = std::ldexp(1.0, -(field.level_x() + field.level_y()));
    double acc = 0.0;
    double comp = 0.0;
    for (double v : field.values()) {
        const double term = v * v * cell - comp;
        const double next = acc + term;
        comp = (next - acc) - term;
        acc = next;
    }
    return acc;
}

} // namespace tenpara
