#include "tenpara/ring.hpp"

#include <cmath>

namespace tenpara {

double ring_value(const RingFieldSpec& spec, double x, double y) {
    const double r = std::hypot(x, y);
    if (r < spec.radius) return std::pow(spec.radius - r, spec.alpha);
    if (r > spec.radius) return std::pow(1.0 - spec.radius / r, spec.alpha);
    return 0.0;
}

UnitGridField generate_ring(const RingFieldSpec& spec) {
    if (!(spec.alpha > 0.0)) throw std::domain_error("ring alpha must be positive");
    if (!(spec.radius > 0.0 && spec.radius < std::sqrt(2.0))) {
        throw std::domain_error("ring radius must lie in (0, sqrt(2))");
    }
    if (spec.grid_level < 1) throw LevelError("ring grid level must be >= 1");
    return sample_grid([&spec](double x, double y) { return ring_value(spec, x, y); },
                       spec.grid_level, spec.grid_level);
}

} // namespace tenpara
