"""Exact isr1 decisions for 2x2 integer matrices.

Thin wrapper over the _isr1 extension module: decisions with verified
idempotent unitizers, clean decompositions, Bezout/divisibility criteria,
and exhaustive finite-ring oracles over Z/n.
"""

import json as _json

try:
    from ._isr1 import *  # noqa: F401,F403  (installed wheel layout)
    from . import _isr1 as _ext
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _isr1 import *  # noqa: F401,F403
    import _isr1 as _ext

__version__ = _ext.__version__


def oracle_full(n):
    """Full classification report over Z/n (n <= 4), as a dict."""
    return _json.loads(_ext.oracle_full_json(n))


def oracle_targeted(n, matrices, convention="c1"):
    """Targeted oracle report over Z/n (n <= 12), as a dict.

    `matrices` is an iterable of 2x2 row lists, e.g. [[[2, 0], [0, 0]]].
    """
    return _json.loads(_ext.oracle_targeted_json(n, list(matrices), convention))


def decide(matrix):
    """Decision for a matrix given as Mat2, "a,b;c,d" text, or row lists."""
    if isinstance(matrix, _ext.Mat2):
        m = matrix
    elif isinstance(matrix, str):
        m = _ext.Mat2.parse(matrix)
    else:
        m = _ext.Mat2(list(matrix))
    return _ext.decide_isr1(m)
