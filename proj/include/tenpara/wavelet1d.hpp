#pragma once

#include <span>
#include <vector>

#include "tenpara/errors.hpp"

namespace tenpara {

// Haar coefficients of a piecewise-constant function on [0,1], levels 0..max_level.
// scaling[j][k] = <f, phi^j_k>, detail[j][k] = <f, psi^j_k> with L2-normalized
// basis functions, so all inner products are exact for an input of length
// 2^(max_level+1).
struct CoeffPyramid1D {
    int max_level = 0;
    std::vector<std::vector<double>> scaling;
    std::vector<std::vector<double>> detail;
};

// Full Haar analysis of a vector of 2^L samples, L >= 1.
CoeffPyramid1D analyze_1d(std::span<const double> values);

// Inverse of analyze_1d; `level` must equal pyramid.max_level + 1.
std::vector<double> synthesize_1d(const CoeffPyramid1D& pyramid, int level);

// Orthogonal projection onto piecewise constants at scale j: block means over
// dyadic blocks of length 2^(L-j). Means use pairwise halving, so projecting an
// already projected vector reproduces it bit-for-bit.
std::vector<double> project_P(std::span<const double> values, int j);

// Detail operator Q^j = P^(j+1) - P^j.
std::vector<double> detail_Q(std::span<const double> values, int j);

// log2 of a power-of-two length; throws ShapeError otherwise.
int level_of_length(std::size_t n);

} // namespace tenpara
