"""Harmonic majorants of -log|B| for finite Blaschke products."""

from ._core import (
    DiskPoint,
    HarmonicFn,
    WhitneySquare,
    ZeroSet,
    blaschke_sum,
    classify,
    family_blaschke,
    format_double,
    h_lambda,
    h_square,
    harmonic_measure,
    harnack_bounds,
    log_modulus,
    majorant_diagnostic,
    min_mass,
    mobius,
    poisson_kernel,
    privalov_shadow,
    pseudo_dist,
    separation,
    thm5a_build,
    whitney_index,
)

__all__ = [name for name in dir() if not name.startswith("_")]
