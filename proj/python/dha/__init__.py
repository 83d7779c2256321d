"""Lens-overlap geometry, special functions and the half-area offset."""

from ._core import (
    HALF_AREA_OFFSET,
    HALF_AREA_OFFSET_LITERAL,
    ConvergenceError,
    DomainError,
    KeplerMethod,
    archav,
    bessel_j,
    beta_complete,
    beta_incomplete,
    beta_regularized,
    beta_regularized_inverse,
    digits_matched,
    dha_report,
    half_overlap_gap,
    hav,
    intersection_abscissae,
    kepler_e,
    lens_area,
    lens_area_montecarlo,
    lens_area_quadrature,
    ln_gamma,
    segment_area,
    solve_offset,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
