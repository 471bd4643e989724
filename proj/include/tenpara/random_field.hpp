#pragma once

#include <cstdint>

#include "tenpara/tensor_ops.hpp"

namespace tenpara {

// Seeded field with prescribed coefficient decay: every complete-basis
// coefficient (mean, pure-axis details, tensor details) is drawn uniformly in
// [-1,1] and scaled by 2^-(j+j')(holder_alpha + 1/2), then synthesized. The
// draw uses raw mt19937_64 output, so results are identical across platforms.
UnitGridField random_field(int level_x, int level_y, double holder_alpha, std::uint64_t seed);

// Pyramid whose wavelet x wavelet supremum at every (j,j') is exactly
// 2^-(j+j')rate (one coefficient per level pair, the rest zero).
TensorCoeffPyramid exact_decay_pyramid(int max_level_x, int max_level_y, double rate);

// Platform-independent seeded uniform [-1,1] samples.
std::vector<double> random_values(std::size_t count, std::uint64_t seed);

} // namespace tenpara
