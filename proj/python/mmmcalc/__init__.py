"""Exact rational computations with characteristic-class pushforwards."""

from ._core import (
    MmmError,
    ch_pushforward,
    holo,
    kappa,
    kappa_kernel,
    kernel,
    kernel_compare,
    l_class,
    normalize,
    run_suite,
    suite_names,
    trg,
    weyl_kernel,
    weyl_matches_gysin,
)

__all__ = [
    "MmmError",
    "ch_pushforward",
    "holo",
    "kappa",
    "kappa_kernel",
    "kernel",
    "kernel_compare",
    "l_class",
    "normalize",
    "run_suite",
    "suite_names",
    "trg",
    "weyl_kernel",
    "weyl_matches_gysin",
]
