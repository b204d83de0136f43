"""The convolution operator built on the normalized Struve kernel.

``apply_s`` convolves a normalized series with the kernel

    phi(z) = z + sum_{n>=1} (-c/4)^n z^(n+1) / ((3/2)_n (k)_n),

which scales coefficient ``a_{n+1}`` by the kernel coefficient.  The index
shift k -> k+1 used by the three-term recurrence is realized as p -> p+1 with
b held fixed.
"""

from __future__ import annotations

from .errors import ParameterError
from .series import DEFAULT_ORDER, PowerSeries, hadamard
from .specialfn import StruveParams


def phi_series(params: StruveParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Kernel coefficients: 0, 1, then ``(-c/4)^n / ((3/2)_n (k)_n)`` at z^(n+1)."""
    if order < 1:
        raise ParameterError("order must be >= 1")
    coeffs = [0j, 1 + 0j]
    a = 1 + 0j
    for n in range(1, order):
        a *= (-params.c / 4.0) / ((n + 0.5) * (params.k + n - 1.0))
        coeffs.append(a)
    return PowerSeries(tuple(coeffs))


def apply_s(params: StruveParams, f: PowerSeries) -> PowerSeries:
    """Convolution of the kernel with a normalized series ``f``."""
    if not f.is_normalized():
        raise ParameterError("operator input must be normalized (c0 = 0, c1 = 1)")
    return hadamard(phi_series(params, f.order), f)


def apply_s_struve(p: complex, f: PowerSeries) -> PowerSeries:
    """Specialization (b, c) = (1, 1): the plain Struve kernel, k = p + 3/2."""
    return apply_s(StruveParams(p, 1.0, 1.0), f)


def apply_s_modified(p: complex, f: PowerSeries) -> PowerSeries:
    """Specialization (b, c) = (1, -1): the modified Struve kernel."""
    return apply_s(StruveParams(p, 1.0, -1.0), f)


def recurrence_residual(params: StruveParams, f: PowerSeries) -> float:
    """Max coefficient residual of the three-term recurrence

        z (S_{k+1} f)' - k S_k f + (k-1) S_{k+1} f = 0.

    Coefficientwise the left side at z^n is ``(n + k - 1) s1_n - k s0_n``;
    a machine-precision maximum certifies the recurrence independently of the
    truncation order.
    """
    s_lo = apply_s(params, f)
    s_hi = apply_s(params.shifted(), f)
    k = params.k
    worst = 0.0
    for n in range(f.order + 1):
        r = n * s_hi[n] - k * s_lo[n] + (k - 1.0) * s_hi[n]
        worst = max(worst, abs(r))
    return worst
