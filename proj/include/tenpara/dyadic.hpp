#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tenpara/errors.hpp"

namespace tenpara {

// Deepest level probed when two coordinates never separate (double mantissa width).
inline constexpr int kMaxDyadicDepth = 52;

// Half-open dyadic interval [2^-j k, 2^-j (k+1)) on [0,1].
struct DyadicInterval {
    int level = 0;
    std::int64_t index = 0;

    double left() const;
    double right() const;
    double length() const;
    bool contains(double x) const;

    friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

struct DyadicRectangle {
    DyadicInterval x_interval;
    DyadicInterval y_interval;

    double area() const;
    bool contains(double x, double y) const;

    friend bool operator==(const DyadicRectangle&, const DyadicRectangle&) = default;
};

// Piecewise-constant sampled field on [0,1]^2 at dyadic resolution 2^L x 2^L'.
// Row index r walks the x axis, column index c the y axis; storage is row-major.
class UnitGridField {
public:
    UnitGridField() = default;
    UnitGridField(int level_x, int level_y);
    UnitGridField(int level_x, int level_y, std::vector<double> values);

    int level_x() const { return level_x_; }
    int level_y() const { return level_y_; }
    std::int64_t rows() const { return std::int64_t{1} << level_x_; }
    std::int64_t cols() const { return std::int64_t{1} << level_y_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
    bool empty() const { return values_.empty(); }

    double& at(std::int64_t r, std::int64_t c) { return values_[r * cols() + c]; }
    double at(std::int64_t r, std::int64_t c) const { return values_[r * cols() + c]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool same_shape(const UnitGridField& other) const {
        return level_x_ == other.level_x_ && level_y_ == other.level_y_;
    }

private:
    int level_x_ = 0;
    int level_y_ = 0;
    std::vector<double> values_;
};

// Dyadic interval of length 2^-j containing x.
DyadicInterval interval_of(double x, int level);

// Length of the smallest dyadic interval containing both points (a tree
// metric). Returns exact 0 for x == y; otherwise 2^-j* where j* is the deepest
// level at which both share an interval, capped at max_depth.
double dyadic_distance(double x, double y, int max_depth = kMaxDyadicDepth);

// Smallest dyadic rectangle containing the four corner points (x1,y1), (x1,y2),
// (x2,y1), (x2,y2). Equal coordinates along an axis cap that axis at max_depth.
DyadicRectangle smallest_containing_rectangle(double x1, double x2, double y1, double y2,
                                              int max_depth = kMaxDyadicDepth);

// Sample a scalar map at dyadic cell centers ((r+1/2) 2^-L, (c+1/2) 2^-L').
// Throws EvalError naming the cell if the map returns a non-finite value.
UnitGridField sample_grid(const std::function<double(double, double)>& scalar_fn,
                          int level_x, int level_y);

// Pointwise field arithmetic; shapes must match.
UnitGridField add(const UnitGridField& a, const UnitGridField& b);
UnitGridField subtract(const UnitGridField& a, const UnitGridField& b);
UnitGridField hadamard(const UnitGridField& a, const UnitGridField& b);
UnitGridField scale(const UnitGridField& a, double c);
double max_abs(const UnitGridField& a);
double max_abs_diff(const UnitGridField& a, const UnitGridField& b);

} // namespace tenpara
