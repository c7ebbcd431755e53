"""Exact computation of sets of subsums, planar cuts, spectra and centers of
distances.

All scalar values cross the boundary as exact literals ("1/2",
"1/3+1/4*sqrt(2)"); no floating point is involved in any computation.
"""

from subsum._core import (
    BudgetExceeded,
    ConfigError,
    DomainError,
    Scalar,
    Series1D,
    Series2D,
    VerificationError,
    center_of_distances,
    check_props,
    classify,
    cover1d,
    cover2d,
    gaps,
    presets,
    psum_cover,
    psum_witness,
    render_svg,
    run_config,
    run_preset,
    spectre_of_points_1d,
    spectre_of_points_2d,
    spectre_of_shape,
    verify_pcut_cut,
)

__all__ = [
    "BudgetExceeded",
    "ConfigError",
    "DomainError",
    "Scalar",
    "Series1D",
    "Series2D",
    "VerificationError",
    "center_of_distances",
    "check_props",
    "classify",
    "cover1d",
    "cover2d",
    "gaps",
    "presets",
    "psum_cover",
    "psum_witness",
    "render_svg",
    "run_config",
    "run_preset",
    "spectre_of_points_1d",
    "spectre_of_points_2d",
    "spectre_of_shape",
    "verify_pcut_cut",
]

__version__ = "0.1.0"
