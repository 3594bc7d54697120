"""Z_{p^s}-linear generalized Hadamard codes: construction, Gray images, rank and kernel,
equivalence chains and classification counts."""

from ._core import (
    CapacityError,
    InputError,
    bounds,
    census,
    chain,
    equiv_check,
    generator,
    gray,
    invariants,
    is_gh_code,
    is_linear,
    isolated_types,
    tau,
)

__all__ = [
    "CapacityError",
    "InputError",
    "bounds",
    "census",
    "chain",
    "equiv_check",
    "generator",
    "gray",
    "invariants",
    "is_gh_code",
    "is_linear",
    "isolated_types",
    "tau",
]
