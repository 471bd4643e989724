#pragma once

// Test-only brute-force oracles, kept independent of the separable fast paths
// they are used to check.

#include <cmath>
#include <vector>

#include "tenpara/dyadic.hpp"
#include "tenpara/tensor_ops.hpp"

namespace tenpara::test {

// Haar basis value at x for the L2-normalized family on [0,1].
inline double haar_value(double x, int j, int k, bool wavelet) {
    const double t = std::ldexp(x, j) - k;
    if (t < 0.0 || t >= 1.0) return 0.0;
    if (!wavelet) return std::exp2(0.5 * j);
    return std::exp2(0.5 * j) * (t < 0.5 ? 1.0 : -1.0);
}

// <f, g^j_k x g^j'_k'> by direct summation over cells.
inline double brute_tensor_coeff(const UnitGridField& f, int j, int jp, int k, int kp,
                                 bool wavelet_x, bool wavelet_y) {
    const double hx = std::ldexp(1.0, -f.level_x());
    const double hy = std::ldexp(1.0, -f.level_y());
    double acc = 0.0;
    for (std::int64_t r = 0; r < f.rows(); ++r) {
        const double gx = haar_value((r + 0.5) * hx, j, k, wavelet_x);
        if (gx == 0.0) continue;
        for (std::int64_t c = 0; c < f.cols(); ++c) {
            const double gy = haar_value((c + 0.5) * hy, jp, kp, wavelet_y);
            if (gy == 0.0) continue;
            acc += f.at(r, c) * gx * gy * hx * hy;
        }
    }
    return acc;
}

// 1D coefficient by direct summation.
inline double brute_coeff_1d(const std::vector<double>& values, int j, int k, bool wavelet) {
    const int level = [&] {
        int l = 0;
        while ((std::size_t{1} << l) < values.size()) ++l;
        return l;
    }();
    const double h = std::ldexp(1.0, -level);
    double acc = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        acc += values[i] * haar_value((i + 0.5) * h, j, k, wavelet) * h;
    }
    return acc;
}

// P^j P'^j' f assembled from brute-force coefficients and basis values
// (projection semantics: sum of <f,phi phi> phi phi).
inline UnitGridField brute_operator(const UnitGridField& f, int j, int jp, OperatorKind kind) {
    const bool wx = kind == OperatorKind::WaveletScaling || kind == OperatorKind::WaveletWavelet;
    const bool wy = kind == OperatorKind::ScalingWavelet || kind == OperatorKind::WaveletWavelet;
    const double hx = std::ldexp(1.0, -f.level_x());
    const double hy = std::ldexp(1.0, -f.level_y());
    UnitGridField out(f.level_x(), f.level_y());

    auto add_rank_one = [&](int jj, int jjp, bool wwx, bool wwy, double sign) {
        for (int k = 0; k < (1 << jj); ++k) {
            for (int kp = 0; kp < (1 << jjp); ++kp) {
                const double coeff = brute_tensor_coeff(f, jj, jjp, k, kp, wwx, wwy);
                for (std::int64_t r = 0; r < f.rows(); ++r) {
                    const double gx = haar_value((r + 0.5) * hx, jj, k, wwx);
                    if (gx == 0.0) continue;
                    for (std::int64_t c = 0; c < f.cols(); ++c) {
                        const double gy = haar_value((c + 0.5) * hy, jjp, kp, wwy);
                        if (gy == 0.0) continue;
                        out.at(r, c) += sign * coeff * gx * gy;
                    }
                }
            }
        }
    };

    // Q factors expand via Q^j = P^(j+1) - P^j so everything reduces to
    // scaling-projection sums.
    if (!wx && !wy) {
        add_rank_one(j, jp, false, false, 1.0);
    } else if (wx && !wy) {
        add_rank_one(j + 1, jp, false, false, 1.0);
        add_rank_one(j, jp, false, false, -1.0);
    } else if (!wx && wy) {
        add_rank_one(j, jp + 1, false, false, 1.0);
        add_rank_one(j, jp, false, false, -1.0);
    } else {
        add_rank_one(j + 1, jp + 1, false, false, 1.0);
        add_rank_one(j, jp + 1, false, false, -1.0);
        add_rank_one(j + 1, jp, false, false, -1.0);
        add_rank_one(j, jp, false, false, 1.0);
    }
    return out;
}

// Smallest dyadic interval containing both points by exhaustive enumeration of
// all intervals up to max_level.
inline double brute_dyadic_distance(double x, double y, int max_level) {
    double best = 1.0;
    for (int j = 0; j <= max_level; ++j) {
        for (std::int64_t k = 0; k < (std::int64_t{1} << j); ++k) {
            const double left = std::ldexp(static_cast<double>(k), -j);
            const double right = std::ldexp(static_cast<double>(k + 1), -j);
            if (x >= left && x < right && y >= left && y < right) {
                best = std::min(best, right - left);
            }
        }
    }
    return best;
}

} // namespace tenpara::test
