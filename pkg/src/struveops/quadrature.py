"""Gauss-Jacobi rules on [0, 1], cached and immutable once built."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy.special import roots_jacobi


@lru_cache(maxsize=None)
def jacobi_rule_01(n: int, alpha: float, beta: float):
    """Nodes/weights with ``sum w_i f(t_i) ~ int_0^1 t^beta (1-t)^alpha f(t) dt``.

    ``alpha`` and ``beta`` are the endpoint exponents at t=1 and t=0; both must
    exceed -1.  The returned arrays are shared across callers and read-only.
    """
    x, w = roots_jacobi(n, alpha, beta)
    t = 0.5 * (x + 1.0)
    w = w * 2.0 ** (-(alpha + beta + 1.0))
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w
