#pragma once

#include "tenpara/dyadic.hpp"

namespace tenpara {

// Ring-singularity test field on [0,1]^2 (z = x + iy measured from the origin
// corner): (radius - |z|)^alpha inside the ring, (1 - radius/|z|)^alpha
// outside, 0 on the circle itself.
struct RingFieldSpec {
    double alpha = 0.4;
    double radius = 0.3;
    int grid_level = 9;  // 2^9 = 512 samples per axis
};

double ring_value(const RingFieldSpec& spec, double x, double y);

UnitGridField generate_ring(const RingFieldSpec& spec);

} // namespace tenpara
