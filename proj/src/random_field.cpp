#include "tenpara/random_field.hpp"

#include <cmath>
#include <random>

namespace tenpara {

namespace {

double uniform_pm1(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -52) - 1.0;
}

// Fill a block with uniform draws rescaled so its supremum is exactly `envelope`,
// keeping the per-(j,j') decay of the synthesized field log-linear.
void fill_block(std::vector<double>& block, double envelope, std::mt19937_64& rng) {
    double peak = 0.0;
    for (double& v : block) {
        v = uniform_pm1(rng);
        peak = std::max(peak, std::abs(v));
    }
    const double gain = peak > 0.0 ? envelope / peak : 0.0;
    for (double& v : block) v *= gain;
}

} // namespace

UnitGridField random_field(int level_x, int level_y, double holder_alpha, std::uint64_t seed) {
    if (level_x < 1 || level_y < 1) throw LevelError("random field levels must be >= 1");
    std::mt19937_64 rng(seed);
    TensorCoeffPyramid pyramid(level_x - 1, level_y - 1);
    const double rate = holder_alpha + 0.5;

    pyramid.at(OperatorKind::ScalingScaling, 0, 0, 0, 0) = uniform_pm1(rng);
    for (int j = 0; j < level_x; ++j) {
        fill_block(pyramid.block(OperatorKind::WaveletScaling, j, 0), std::exp2(-j * rate), rng);
    }
    for (int jp = 0; jp < level_y; ++jp) {
        fill_block(pyramid.block(OperatorKind::ScalingWavelet, 0, jp), std::exp2(-jp * rate), rng);
    }
    for (int j = 0; j < level_x; ++j) {
        for (int jp = 0; jp < level_y; ++jp) {
            fill_block(pyramid.block(OperatorKind::WaveletWavelet, j, jp),
                       std::exp2(-(j + jp) * rate), rng);
        }
    }
    return tensor_synthesize(pyramid, level_x, level_y);
}

TensorCoeffPyramid exact_decay_pyramid(int max_level_x, int max_level_y, double rate) {
    TensorCoeffPyramid pyramid(max_level_x, max_level_y);
    for (int j = 0; j <= max_level_x; ++j) {
        for (int jp = 0; jp <= max_level_y; ++jp) {
            pyramid.at(OperatorKind::WaveletWavelet, j, jp, 0, 0) = std::exp2(-(j + jp) * rate);
        }
    }
    return pyramid;
}

std::vector<double> random_values(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (double& v : out) v = uniform_pm1(rng);
    return out;
}

} // namespace tenpara
