"""Polynomial metrics, the exact certificate checks and the torus scan."""

from ._dsmale import (  # noqa: F401
    Error,
    InputParseError,
    NonConvergence,
    NotInClass,
    conjecture_sample_check,
    disc_bound_sample_check,
    extremal_g1,
    extremal_g23,
    extremal_metrics,
    find_roots,
    grid_scan,
    metrics,
    numeric_oracles,
    objective,
    parse_polynomial,
    refine,
    scan_and_refine,
    verify_equality_cases,
    verify_identity,
    verify_lemma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
