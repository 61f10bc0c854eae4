"""Simultaneous polynomial root-finding with convergence certificates.

Polynomials are monic and given by their lower coefficients
``[c0, c1, ..., c_{n-1}]`` (constant term first). Points are lists of
complex numbers. Numbers in returned documents are decimal strings, as in
the command-line output.
"""

import json
import math

from ._core import (  # noqa: F401
    SimulrootsError,
    compare_csv,
    eval,
    inclusion_disks,
    phi,
    quality,
    reference_roots,
    step,
    threshold,
    weierstrass_corrections,
)
from . import _core


def solve(coeffs, z=None, method="ehrlich", p=math.inf, tol=1e-12, max_iters=100,
          stop="aposteriori", oracle=False):
    """Run an iteration and return the trace document as a dict."""
    return json.loads(_core._solve(coeffs, z, method, p, tol, max_iters, stop, oracle))


def certify(coeffs, z, method="ehrlich", p=math.inf, pessimistic=False):
    """Evaluate the initial-condition certificate at z (method or "localization")."""
    return json.loads(_core._certify(method, coeffs, z, p, pessimistic))


def constants():
    return json.loads(_core._constants())
