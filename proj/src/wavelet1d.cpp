#include "tenpara/wavelet1d.hpp"

#include <cmath>
#include <string>

namespace tenpara {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

} // namespace

int level_of_length(std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0) {
        throw ShapeError("length must be a power of two, got " + std::to_string(n));
    }
    int level = 0;
    while ((std::size_t{1} << level) < n) ++level;
    return level;
}

CoeffPyramid1D analyze_1d(std::span<const double> values) {
    const int big_l = level_of_length(values.size());
    if (big_l < 1) throw ShapeError("analyze_1d needs at least two samples");

    CoeffPyramid1D pyramid;
    pyramid.max_level = big_l - 1;
    pyramid.scaling.resize(big_l);
    pyramid.detail.resize(big_l);

    // Finest scaling coefficients carry the cell measure: <f, phi^L_k> = v_k 2^(-L/2).
    const double root_h = std::sqrt(std::ldexp(1.0, -big_l));
    std::vector<double> buf(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) buf[i] = values[i] * root_h;

    for (int j = big_l - 1; j >= 0; --j) {
        const std::size_t count = std::size_t{1} << j;
        pyramid.scaling[j].resize(count);
        pyramid.detail[j].resize(count);
        for (std::size_t k = 0; k < count; ++k) {
            const double a = buf[2 * k];
            const double b = buf[2 * k + 1];
            pyramid.scaling[j][k] = (a + b) * kInvSqrt2;
            pyramid.detail[j][k] = (a - b) * kInvSqrt2;
        }
        for (std::size_t k = 0; k < count; ++k) buf[k] = pyramid.scaling[j][k];
    }
    return pyramid;
}

std::vector<double> synthesize_1d(const CoeffPyramid1D& pyramid, int level) {
    if (level != pyramid.max_level + 1) {
        throw ShapeError("synthesis level must be max_level + 1");
    }
    if (pyramid.scaling.empty() || pyramid.scaling[0].size() != 1) {
        throw ShapeError("pyramid is missing the level-0 scaling coefficient");
    }
    std::vector<double> buf{pyramid.scaling[0][0]};
    for (int j = 0; j <= pyramid.max_level; ++j) {
        const std::size_t count = std::size_t{1} << j;
        if (pyramid.detail[j].size() != count) {
            throw ShapeError("detail level " + std::to_string(j) + " has wrong size");
        }
        std::vector<double> next(2 * count);
        for (std::size_t k = 0; k < count; ++k) {
            next[2 * k] = (buf[k] + pyramid.detail[j][k]) * kInvSqrt2;
            next[2 * k + 1] = (buf[k] - pyramid.detail[j][k]) * kInvSqrt2;
        }
        buf.swap(next);
    }
    const double inv_root_h = std::sqrt(std::ldexp(1.0, level));
    for (double& v : buf) v *= inv_root_h;
    return buf;
}

std::vector<double> project_P(std::span<const double> values, int j) {
    const int big_l = level_of_length(values.size());
    if (j < 0 || j > big_l) {
        throw LevelError("projection level " + std::to_string(j) + " out of range [0," +
                         std::to_string(big_l) + "]");
    }
    std::vector<double> out(values.size());
    const std::size_t block = std::size_t{1} << (big_l - j);
    std::vector<double> tmp(block);
    for (std::size_t start = 0; start < values.size(); start += block) {
        for (std::size_t i = 0; i < block; ++i) tmp[i] = values[start + i];
        // Pairwise halving keeps means of equal values exact.
        for (std::size_t m = block; m > 1; m /= 2) {
            for (std::size_t i = 0; i < m / 2; ++i) tmp[i] = 0.5 * (tmp[2 * i] + tmp[2 * i + 1]);
        }
        for (std::size_t i = 0; i < block; ++i) out[start + i] = tmp[0];
    }
    return out;
}

std::vector<double> detail_Q(std::span<const double> values, int j) {
    const int big_l = level_of_length(values.size());
    if (j < 0 || j + 1 > big_l) {
        throw LevelError("detail level " + std::to_string(j) + " out of range [0," +
                         std::to_string(big_l - 1) + "]");
    }
    std::vector<double> fine = project_P(values, j + 1);
    const std::vector<double> coarse = project_P(values, j);
    for (std::size_t i = 0; i < fine.size(); ++i) fine[i] -= coarse[i];
    return fine;
}

} // namespace tenpara
