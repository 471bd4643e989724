"""Multiscale tensor paraproduct decomposition of nonlinear compositions A(f).

Thin wrapper over the C++ core: Haar tensor pyramids on [0,1]^2, the four
scale/detail convolution operators, the paraproduct approximation and its
residual, and coefficient-decay regularity reports.
"""

from ._tenpara import (
    DecayReport,
    Decomposition,
    EvalError,
    IoError,
    LevelError,
    ResidualReport,
    ShapeError,
    TensorCoeffPyramid,
    analyze_1d,
    apply_operator,
    decay_report,
    decompose,
    detail,
    direct_mixed_holder_quotients,
    estimate_alpha,
    generate_ring,
    mixed_holder_norm,
    project,
    random_field,
    read_tpmx,
    residual_integral_form,
    residual_report,
    run_figure,
    run_verify,
    synthesize_1d,
    telescoping_mixed_sum,
    tensor_analyze,
    tensor_synthesize,
    write_pgm,
    write_tpmx,
)

__all__ = [
    "DecayReport",
    "Decomposition",
    "EvalError",
    "IoError",
    "LevelError",
    "ResidualReport",
    "ShapeError",
    "TensorCoeffPyramid",
    "analyze_1d",
    "apply_operator",
    "decay_report",
    "decompose",
    "detail",
    "direct_mixed_holder_quotients",
    "estimate_alpha",
    "generate_ring",
    "mixed_holder_norm",
    "project",
    "random_field",
    "read_tpmx",
    "residual_integral_form",
    "residual_report",
    "run_figure",
    "run_verify",
    "synthesize_1d",
    "telescoping_mixed_sum",
    "tensor_analyze",
    "tensor_synthesize",
    "write_pgm",
    "write_tpmx",
]
