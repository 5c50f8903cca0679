"""Structure constants of equivariant K-theory of flag varieties and Bott towers.

Words are 1-based strings such as "1 2 1"; the empty string is the identity.
Characters come back in canonical text form, e.g. "-e^{2*a1+2*a2}".
"""

import json

from ._core import (
    CapExceeded,
    ConsistencyError,
    Error,
    InexactDivision,
    InvalidInput,
    bs_structure_const,
    chi_basis_product,
    psi_restrict,
    q_const,
    q_table,
    run_cli,
    t_const,
    tower_structure_const,
)
from ._core import verify as _verify


def verify(suite="all", seed=20240601):
    """Run a self-check suite and return its report as a dict."""
    return json.loads(_verify(suite, seed))


__all__ = [
    "CapExceeded",
    "ConsistencyError",
    "Error",
    "InexactDivision",
    "InvalidInput",
    "bs_structure_const",
    "chi_basis_product",
    "psi_restrict",
    "q_const",
    "q_table",
    "run_cli",
    "t_const",
    "tower_structure_const",
    "verify",
]
