"""Python access to the Fano threefold enumerator."""

import json

from . import _core
from ._core import (
    FanoError,
    antican_cube_divisor_in_p2_bundle,
    antican_cube_p1_bundle_over_surface,
    conic_bundle_ksq_dot_pullback,
    emit,
    genus_from_blowup,
    lattice_index_candidates,
    run_cli,
    verify,
)

__all__ = [
    "FanoError",
    "antican_cube_divisor_in_p2_bundle",
    "antican_cube_p1_bundle_over_surface",
    "conic_bundle_ksq_dot_pullback",
    "emit",
    "enumerate_all",
    "genus_from_blowup",
    "ground_truth",
    "lattice_index_candidates",
    "run_cli",
    "verify",
]


def enumerate_all(rho, primitive_only=False):
    """Enumerated families as a list of row dictionaries."""
    return json.loads(_core.enumerate_json(rho, primitive_only))


def ground_truth(rho, primitive_only=False):
    """Rows of the embedded classification table."""
    return json.loads(_core.ground_truth_json(rho, primitive_only))
