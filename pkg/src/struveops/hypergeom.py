"""Gauss hypergeometric 2F1 through three mutually checking representations.

* ``f21_series``   -- the defining power series, valid on |z| < 1;
* ``f21_euler``    -- the Euler integral, valid for Re c > Re b > 0 and
                      z off [1, oo), evaluated by Gauss-Jacobi quadrature
                      whose weight absorbs the endpoint singularities;
* ``f21_pfaff``    -- the Pfaff transformation
                      ``(1-z)^(-a) 2F1(a, c-b, c; z/(z-1))``,
                      which maps the half-plane Re z < 1/2 into the unit disk
                      and therefore reaches arguments far outside it
                      (z -> -1 and beyond) at geometric convergence rates.

``f21`` dispatches between the series and the Pfaff route; the Euler integral
is kept as the independent cross-check path.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .quadrature import jacobi_rule_01
from .specialfn import cpow, gamma, is_nonpositive_integer

MAX_TERMS = 100_000


@dataclass(frozen=True)
class HypergeomParams:
    """Parameters (a, b, c) of 2F1; c at a nonpositive integer is rejected."""

    a: complex
    b: complex
    c: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))
        if is_nonpositive_integer(self.c):
            raise ParameterError(f"2F1 parameter c = {self.c} is a nonpositive integer")


def f21_series(hp: HypergeomParams, z: complex, tol: float = 1e-13) -> complex:
    """Partial sum of ``sum (a)_n (b)_n z^n / ((c)_n n!)`` on |z| < 1.

    Summation stops once the tail estimate |term| / (1 - |z|) drops below
    ``tol``; a hard cap guards against |z| so close to 1 that the estimate
    never does.
    """
    z = complex(z)
    r = abs(z)
    if r >= 1.0:
        raise DomainError(f"2F1 series needs |z| < 1, got |z| = {r:g}")
    a, b, c = hp.a, hp.b, hp.c
    gap = 1.0 - r
    term = 1 + 0j
    total = term
    for n in range(MAX_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
        if abs(term) / gap < tol:
            return total
    raise ConvergenceError(
        f"2F1 series did not reach tol={tol:g} within {MAX_TERMS} terms at z={z}"
    )


def f21_euler(hp: HypergeomParams, z: complex, nodes: int = 128) -> complex:
    """Euler integral
    ``G(c)/(G(c-b)G(b)) int_0^1 t^(b-1) (1-t)^(c-b-1) (1-tz)^(-a) dt``.

    The real parts of the endpoint exponents go into the Gauss-Jacobi weight;
    any imaginary parts remain in the integrand as unit-modulus factors.
    Requires Re c > Re b > 0 and z off the cut [1, oo).
    """
    z = complex(z)
    a, b, c = hp.a, hp.b, hp.c
    if not (c.real > b.real > 0.0):
        raise ParameterError(
            f"Euler integral needs Re c > Re b > 0, got b={b}, c={c}"
        )
    if z.imag == 0.0 and z.real >= 1.0:
        raise DomainError(f"Euler integral undefined on the cut [1, oo): z = {z}")
    t, w = jacobi_rule_01(nodes, c.real - b.real - 1.0, b.real - 1.0)
    f = np.exp(-a * np.log(1.0 - t * z))
    if b.imag != 0.0:
        f = f * np.exp(1j * b.imag * np.log(t))
    if (c - b).imag != 0.0:
        f = f * np.exp(1j * (c - b).imag * np.log(1.0 - t))
    integral = complex(np.dot(w, f))
    return gamma(c) / (gamma(c - b) * gamma(b)) * integral


def f21_pfaff(hp: HypergeomParams, z: complex, tol: float = 1e-13) -> complex:
    """Pfaff transformation ``(1-z)^(-a) 2F1(a, c-b, c; z/(z-1))``.

    Defined whenever the transformed argument lies in the unit disk, i.e. for
    Re z < 1/2; this is how arguments approaching -1 (and past it) stay at
    geometric convergence.
    """
    z = complex(z)
    if z == 1.0:
        raise DomainError("Pfaff transformation undefined at z = 1")
    w = z / (z - 1.0)
    if abs(w) >= 1.0:
        raise DomainError(
            f"Pfaff argument z/(z-1) = {w} outside the unit disk (needs Re z < 1/2)"
        )
    inner = f21_series(HypergeomParams(hp.a, hp.c - hp.b, hp.c), w, tol)
    return cpow(1.0 - z, -hp.a) * inner


def f21(hp: HypergeomParams, z: complex, tol: float = 1e-13) -> complex:
    """Dispatcher: series for small |z|, Pfaff wherever it converges, series
    again on the rest of the unit disk.

    Covers every z with |z| < 1 plus the analytic continuation onto
    Re z < 1/2; arguments with |z| >= 1 and Re z >= 1/2 are rejected.
    """
    z = complex(z)
    if abs(z) <= 0.5:
        return f21_series(hp, z, tol)
    if z.real < 0.5:
        return f21_pfaff(hp, z, tol)
    if abs(z) < 1.0:
        return f21_series(hp, z, tol)
    raise DomainError(
        f"2F1 argument z = {z} outside the supported region (|z| < 1 or Re z < 1/2)"
    )


def f21_symmetry_check(hp: HypergeomParams, z: complex, tol: float = 1e-13) -> float:
    """|2F1(a,b,c;z) - 2F1(b,a,c;z)| through the series on |z| < 1."""
    direct = f21_series(hp, z, tol)
    swapped = f21_series(HypergeomParams(hp.b, hp.a, hp.c), z, tol)
    return abs(direct - swapped)
