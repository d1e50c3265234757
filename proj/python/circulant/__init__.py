"""Exact spanning-tree counts of circulant graphs with scaled jumps.

Thin pythonic wrapper over the C++ extension: counts are exact integers,
reports are plain dictionaries decoded from the engine's JSON documents.
"""

import json as _json

from ._circulant import (  # noqa: F401
    NotPerfectSquareError,
    PrecisionError,
    SpecError,
    TooLargeError,
    UndefinedSquarefreeError,
    __version__,
    chebyshev_t,
    tau,
)
from . import _circulant as _ext


def validate(beta, s, alpha=(), n=1):
    """Validate parameters and return the derived fields (d, delta, m, ...)."""
    return _json.loads(_ext.validate_json(beta, list(s), list(alpha), n))


def tau_report(beta, s, alpha=(), n=1, method="all", bruteforce_cap=4096,
               precision_max=1 << 15):
    """Per-method counting report with the cross-check agreement flag."""
    return _json.loads(
        _ext.tau_json(beta, list(s), list(alpha), n, method, bruteforce_cap,
                      precision_max))


def decompose(beta, s, alpha=(), n=1):
    """The tau = c * n * a(n)^2 decomposition with its parity case."""
    doc = _json.loads(_ext.decompose_json(beta, list(s), list(alpha), n))
    doc["a"] = int(doc["a"])
    doc["tau"] = int(doc["tau"])
    return doc


def mahler(beta, s, alpha=(), n=1, target_bits=64, quadrature=True,
           convergence_n=()):
    """Mahler measures of the attached polynomials and the growth constant."""
    return _json.loads(
        _ext.mahler_json(beta, list(s), list(alpha), n, target_bits,
                         quadrature, list(convergence_n)))


def laplacian(beta, s, alpha=(), n=1):
    """The Laplacian matrix as a list of integer rows."""
    return _json.loads(_ext.laplacian_json(beta, list(s), list(alpha), n))["rows"]


def verify(examples_only=False, identity_count=200, seed=0x5EED):
    """Run the built-in verification sweep; returns the summary."""
    return _json.loads(_ext.verify_json(examples_only, identity_count, seed))
