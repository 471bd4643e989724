#pragma once

#include <array>
#include <string>
#include <vector>

#include "tenpara/dyadic.hpp"

namespace tenpara {

// The four tensor convolution operators, one per basis-function combination.
enum class OperatorKind {
    ScalingScaling,  // P^j P'^j'   (phi x phi)
    ScalingWavelet,  // P^j Q'^j'   (phi x psi)
    WaveletScaling,  // Q^j P'^j'   (psi x phi)
    WaveletWavelet,  // Q^j Q'^j'   (psi x psi)
};

const char* operator_kind_name(OperatorKind kind);
OperatorKind operator_kind_from_name(const std::string& name);

// Tensor Haar coefficients of a field for all level pairs (j,j') in
// [0,max_level_x] x [0,max_level_y]. Four families:
//   eta   (scaling x scaling), omega_ws (wavelet x scaling),
//   omega_sw (scaling x wavelet), alpha (wavelet x wavelet).
// Each family block at (j,j') is a 2^j x 2^j' matrix stored row-major in k.
class TensorCoeffPyramid {
public:
    TensorCoeffPyramid() = default;
    TensorCoeffPyramid(int max_level_x, int max_level_y);

    int max_level_x() const { return max_level_x_; }
    int max_level_y() const { return max_level_y_; }
    bool empty() const { return families_[0].empty(); }

    std::vector<double>& block(OperatorKind kind, int j, int jp);
    const std::vector<double>& block(OperatorKind kind, int j, int jp) const;

    double& at(OperatorKind kind, int j, int jp, std::int64_t k, std::int64_t kp) {
        return block(kind, j, jp)[(k << jp) + kp];
    }
    double at(OperatorKind kind, int j, int jp, std::int64_t k, std::int64_t kp) const {
        return block(kind, j, jp)[(k << jp) + kp];
    }

private:
    int max_level_x_ = -1;
    int max_level_y_ = -1;
    std::array<std::vector<std::vector<double>>, 4> families_;
};

// Exact tensor Haar analysis (separable cascades, rows then columns).
// Requires max_level_x + 1 <= field.level_x() and likewise along y.
TensorCoeffPyramid tensor_analyze(const UnitGridField& field, int max_level_x, int max_level_y);

// Inverse of tensor_analyze; requires a full-depth pyramid
// (max_level_x = level_x - 1, max_level_y = level_y - 1).
UnitGridField tensor_synthesize(const TensorCoeffPyramid& pyramid, int level_x, int level_y);

// Apply one tensor convolution operator at scales (j,j'), returning a field at
// the input resolution (piecewise constant on the operator's blocks).
UnitGridField apply_operator(const UnitGridField& field, int j, int jp, OperatorKind kind);

// Separable projection helpers: block means along one axis only.
UnitGridField project_rows(const UnitGridField& field, int j);   // P^j along x
UnitGridField project_cols(const UnitGridField& field, int jp);  // P'^j' along y

// Squared L2 norm of the field with cell measure 2^-(L+L').
double field_l2_norm_sq(const UnitGridField& field);

} // namespace tenpara
