#pragma once

#include <stdexcept>
#include <string>

namespace tenpara {

// Wrong array length / incompatible coefficient layout.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scale parameter out of range for a field or pyramid.
struct LevelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-finite value produced while sampling or applying a scalar map.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tenpara
