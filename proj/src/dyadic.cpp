#include "tenpara/dyadic.hpp"

#include <cmath>
#include <string>

namespace tenpara {

namespace {

void require_unit_range(double x, const char* what) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw std::domain_error(std::string(what) + " must lie in [0,1), got " +
                                std::to_string(x));
    }
}

// Deepest level at which x and y share a dyadic interval, capped.
int deepest_common_level(double x, double y, int max_depth) {
    int level = 0;
    while (level < max_depth &&
           std::floor(std::ldexp(x, level + 1)) == std::floor(std::ldexp(y, level + 1))) {
        ++level;
    }
    return level;
}

} // namespace

double DyadicInterval::left() const { return std::ldexp(static_cast<double>(index), -level); }
double DyadicInterval::right() const { return std::ldexp(static_cast<double>(index + 1), -level); }
double DyadicInterval::length() const { return std::ldexp(1.0, -level); }
bool DyadicInterval::contains(double x) const { return x >= left() && x < right(); }

double DyadicRectangle::area() const { return x_interval.length() * y_interval.length(); }
bool DyadicRectangle::contains(double x, double y) const {
    return x_interval.contains(x) && y_interval.contains(y);
}

UnitGridField::UnitGridField(int level_x, int level_y)
    : level_x_(level_x), level_y_(level_y) {
    if (level_x < 0 || level_y < 0) throw LevelError("field levels must be non-negative");
    values_.assign((std::size_t{1} << level_x) << level_y, 0.0);
}

UnitGridField::UnitGridField(int level_x, int level_y, std::vector<double> values)
    : level_x_(level_x), level_y_(level_y), values_(std::move(values)) {
    if (level_x < 0 || level_y < 0) throw LevelError("field levels must be non-negative");
    if (values_.size() != (std::size_t{1} << level_x) << level_y) {
        throw ShapeError("field value count must be 2^(L+L'), got " +
                         std::to_string(values_.size()));
    }
}

DyadicInterval interval_of(double x, int level) {
    require_unit_range(x, "coordinate");
    if (level < 0) throw std::domain_error("level must be non-negative");
    return DyadicInterval{level, static_cast<std::int64_t>(std::floor(std::ldexp(x, level)))};
}

double dyadic_distance(double x, double y, int max_depth) {
    require_unit_range(x, "x");
    require_unit_range(y, "y");
    if (x == y) return 0.0;
    return std::ldexp(1.0, -deepest_common_level(x, y, max_depth));
}

DyadicRectangle smallest_containing_rectangle(double x1, double x2, double y1, double y2,
                                              int max_depth) {
    require_unit_range(x1, "x1");
    require_unit_range(x2, "x2");
    require_unit_range(y1, "y1");
    require_unit_range(y2, "y2");
    const int jx = (x1 == x2) ? max_depth : deepest_common_level(x1, x2, max_depth);
    const int jy = (y1 == y2) ? max_depth : deepest_common_level(y1, y2, max_depth);
    return DyadicRectangle{interval_of(x1, jx), interval_of(y1, jy)};
}

UnitGridField sample_grid(const std::function<double(double, double)>& scalar_fn,
                          int level_x, int level_y) {
    UnitGridField field(level_x, level_y);
    const double hx = std::ldexp(1.0, -level_x);
    const double hy = std::ldexp(1.0, -level_y);
    for (std::int64_t r = 0; r < field.rows(); ++r) {
        const double x = (static_cast<double>(r) + 0.5) * hx;
        for (std::int64_t c = 0; c < field.cols(); ++c) {
            const double y = (static_cast<double>(c) + 0.5) * hy;
            const double v = scalar_fn(x, y);
            if (!std::isfinite(v)) {
                throw EvalError("non-finite sample at cell (" + std::to_string(r) + "," +
                                std::to_string(c) + "), center (" + std::to_string(x) + "," +
                                std::to_string(y) + ")");
            }
            field.at(r, c) = v;
        }
    }
    return field;
}

namespace {

void require_same_shape(const UnitGridField& a, const UnitGridField& b) {
    if (!a.same_shape(b)) throw ShapeError("field shapes differ");
}

} // namespace

UnitGridField add(const UnitGridField& a, const UnitGridField& b) {
    require_same_shape(a, b);
    UnitGridField out = a;
    for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] += b.values()[i];
    return out;
}

UnitGridField subtract(const UnitGridField& a, const UnitGridField& b) {
    require_same_shape(a, b);
    UnitGridField out = a;
    for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] -= b.values()[i];
    return out;
}

UnitGridField hadamard(const UnitGridField& a, const UnitGridField& b) {
    require_same_shape(a, b);
    UnitGridField out = a;
    for (std::size_t i = 0; i < out.values().size(); ++i) out.values()[i] *= b.values()[i];
    return out;
}

UnitGridField scale(const UnitGridField& a, double c) {
    UnitGridField out = a;
    for (double& v : out.values()) v *= c;
    return out;
}

double max_abs(const UnitGridField& a) {
    double m = 0.0;
    for (double v : a.values()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_diff(const UnitGridField& a, const UnitGridField& b) {
    require_same_shape(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.values().size(); ++i) {
        m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
    }
    return m;
}

} // namespace tenpara
