#pragma once

#include <string>
#include <vector>

namespace tenpara {

// Reproduce the ring-singularity image grid: for alpha = 4e-1, 4e-2, 4e-3
// (column order), render f, A(f) with A(u) = exp(-0.2 u), and the
// approximations at scales (4,4) and (6,6), plus a decay-report CSV per
// residual and a manifest. Deterministic: a rerun is byte-identical.
// Returns the relative names of all files written, manifest last.
std::vector<std::string> run_figure(const std::string& output_dir, int grid_level = 9);

} // namespace tenpara
