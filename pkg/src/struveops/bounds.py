"""Sharp bounds and certificates for the subordination chain.

Everything here is parameterized by the exponent ``beta = mu*k/lambda`` and a
Möbius target (A, B).  The central object is the best dominant

    q(z) = beta * int_0^1 phi(z u) u^(beta-1) du,            phi = (1+Aw)/(1+Bw),

computed by Gauss-Jacobi quadrature whose weight absorbs the u^(beta-1)
endpoint singularity, and its closed form

    h(z) = A/B + (1 - A/B) (1+Bz)^(-1) 2F1(1, 1, beta+1; Bz/(1+Bz))   (B != 0)
    h(z) = 1 + (beta/(beta+1)) A z                                    (B  = 0)

which the 2F1 dispatcher evaluates for every z in the disk (the Pfaff route
turns the argument Bz/(1+Bz) into -Bz, always inside the disk).  The real and
modulus bound pairs are the same closed form at the real arguments +-B and
+-Br.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .classes import MobiusTarget
from .errors import ConvergenceError, DomainError, ParameterError
from .hypergeom import HypergeomParams, f21
from .quadrature import jacobi_rule_01
from .classes import Verdict


@dataclass(frozen=True)
class DominantParams:
    """Exponent ``beta = mu*k/lambda`` plus the Möbius target it dominates.

    beta's sign requirements differ per theorem (q and h need beta > 0, the
    bound pairs allow beta >= 0), so they are enforced per operation rather
    than at construction.
    """

    beta: float
    target: MobiusTarget

    def __post_init__(self) -> None:
        beta = float(self.beta)
        if not math.isfinite(beta):
            raise ParameterError(f"beta must be finite, got {beta}")
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_ratio(cls, lam: float, mu: float, k: float,
                   target: MobiusTarget) -> "DominantParams":
        if lam == 0:
            raise ParameterError("lambda = 0 leaves the exponent mu*k/lambda undefined")
        return cls(mu * k / lam, target)


def _q_quadrature(dp: DominantParams, z: complex, nodes: int) -> complex:
    t, w = jacobi_rule_01(nodes, 0.0, dp.beta - 1.0)
    zu = z * t
    values = (1.0 + dp.target.A * zu) / (1.0 + dp.target.B * zu)
    return dp.beta * complex(np.dot(w, values))


def best_dominant_q(dp: DominantParams, z: complex, nodes: int = 128) -> complex:
    """The dominant ``beta * int_0^1 phi(zu) u^(beta-1) du`` inside the disk.

    Evaluated twice (full and half node count); a mismatch beyond 1e-8 of the
    value scale is reported as quadrature non-convergence.
    """
    if dp.beta <= 0:
        raise ParameterError(f"best dominant needs beta > 0, got {dp.beta}")
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"best dominant defined on |z| < 1, got |z| = {abs(z):g}")
    full = _q_quadrature(dp, z, nodes)
    half = _q_quadrature(dp, z, max(8, nodes // 2))
    if abs(full - half) > 1e-8 * max(1.0, abs(full)):
        raise ConvergenceError(
            f"quadrature for q({z}) did not settle: {nodes} vs {nodes // 2} nodes "
            f"differ by {abs(full - half):g}"
        )
    return full


def sharp_bound_h(dp: DominantParams, z: complex, tol: float = 1e-13) -> complex:
    """Closed form of the best dominant (see module docstring)."""
    if dp.beta <= 0:
        raise ParameterError(f"sharp bound needs beta > 0, got {dp.beta}")
    z = complex(z)
    if abs(z) >= 1.0:
        raise DomainError(f"sharp bound defined on |z| < 1, got |z| = {abs(z):g}")
    A, B = dp.target.A, dp.target.B
    if B == 0.0:
        return 1.0 + dp.beta / (dp.beta + 1.0) * A * z
    w = B * z / (1.0 + B * z)
    value = f21(HypergeomParams(1.0, 1.0, dp.beta + 1.0), w, tol)
    return A / B + (1.0 - A / B) * value / (1.0 + B * z)


def lower_bound_h_minus1(dp: DominantParams, nodes: int = 192) -> float:
    """Radial limit ``h(-1) = beta int_0^1 (1-At)/(1-Bt) t^(beta-1) dt``.

    The integrand is bounded for every valid target: 1 - Bt only vanishes on
    [0, 1] when B = 1, which B < A <= 1 excludes (B = -1 gives 1 + t).  The
    value is the infimum of Re h over the disk.
    """
    if dp.beta <= 0:
        raise ParameterError(f"lower bound needs beta > 0, got {dp.beta}")
    A, B = dp.target.A, dp.target.B
    t, w = jacobi_rule_01(nodes, 0.0, dp.beta - 1.0)
    values = (1.0 - A * t) / (1.0 - B * t)
    full = dp.beta * float(np.dot(w, values))
    t2, w2 = jacobi_rule_01(max(8, nodes // 2), 0.0, dp.beta - 1.0)
    half = dp.beta * float(np.dot(w2, (1.0 - A * t2) / (1.0 - B * t2)))
    if abs(full - half) > 1e-8 * max(1.0, abs(full)):
        raise ConvergenceError(
            f"quadrature for h(-1) did not settle (difference {abs(full - half):g})"
        )
    return full


def radius_positivity(lam: float, mu: float, k: float) -> float:
    """Radius ``r* = -c + sqrt(c^2 + 1)`` with ``c = |lambda/(mu k)|``.

    The membership functional keeps positive real part on |z| < r*; the
    formula lives in (0, 1) exactly when lambda != 0 and mu*k != 0.
    """
    if mu * k == 0:
        raise ParameterError("mu*k = 0 leaves the ratio |lambda/(mu k)| undefined")
    if lam == 0:
        raise ParameterError("lambda = 0 degenerates the radius to the full disk")
    c = abs(lam / (mu * k))
    return -c + math.sqrt(c * c + 1.0)


def radius_factor(lam: float, mu: float, k: float, r: float) -> float:
    """Positivity factor ``(1 - r^2 - 2 c r) / (1 - r^2)``.

    Positive exactly when r < radius_positivity(lam, mu, k).
    """
    if not 0.0 <= r < 1.0:
        raise ParameterError(f"r must lie in [0, 1), got {r}")
    if mu * k == 0:
        raise ParameterError("mu*k = 0 leaves the ratio |lambda/(mu k)| undefined")
    c = abs(lam / (mu * k))
    return (1.0 - r * r - 2.0 * c * r) / (1.0 - r * r)


def re_zqprime_over_q(B: float, r: float, psi: float) -> float:
    """Closed form of ``Re(z Q'(z)/Q(z))`` for ``Q(z) = const * z/(1+Bz)^2``:

        (1 - B^2 r^2) / ((1 + B r cos psi)^2 + B^2 r^2 sin^2 psi),

    at ``z = r e^(i psi)``.  Strictly positive for |B r| < 1, which is the
    starlikeness of Q on the unit disk.
    """
    br = B * r
    return (1.0 - br * br) / (
        (1.0 + br * math.cos(psi)) ** 2 + (br * math.sin(psi)) ** 2
    )


def _zqprime_over_q_direct(B: float, z: complex) -> complex:
    # Quotient-rule evaluation of z Q'/Q for Q = z/(1+Bz)^2, no simplification.
    num = z
    den = (1.0 + B * z) ** 2
    dnum = 1.0
    dden = 2.0 * B * (1.0 + B * z)
    qprime = (dnum * den - num * dden) / (den * den)
    q = num / den
    return z * qprime / q


def q_starlike_certificate(A: float, B: float, grid_r: int = 50,
                           grid_psi: int = 360) -> Verdict:
    """Certify starlikeness of ``Q(z) = const * (A-B) z / (1+Bz)^2``.

    Sweeps the closed form of Re(z Q'/Q) over an (r, psi) grid with r < 1 and
    additionally reconciles it against direct quotient-rule differentiation at
    20 fixed interior points (the scalar prefactor cancels, so the certificate
    is independent of A up to parameter validation).
    """
    MobiusTarget(A, B)  # validates -1 <= B < A <= 1
    if grid_r < 1 or grid_psi < 1:
        raise ParameterError("grid sizes must be positive")
    rs = np.linspace(0.99 / grid_r, 0.99, grid_r)
    psis = np.linspace(0.0, 2.0 * math.pi, grid_psi, endpoint=False)
    rr, pp = np.meshgrid(rs, psis, indexing="ij")
    br = B * rr
    values = (1.0 - br**2) / ((1.0 + br * np.cos(pp)) ** 2 + (br * np.sin(pp)) ** 2)
    idx = np.unravel_index(np.argmin(values), values.shape)
    worst = float(values[idx])
    witness = rs[idx[0]] * cmath.exp(1j * psis[idx[1]])

    rng = np.random.default_rng(20210)
    consistent = True
    for _ in range(20):
        r = float(rng.uniform(0.05, 0.9))
        psi = float(rng.uniform(0.0, 2.0 * math.pi))
        z = r * cmath.exp(1j * psi)
        direct = _zqprime_over_q_direct(B, z).real
        if abs(direct - re_zqprime_over_q(B, r, psi)) > 1e-10:
            consistent = False
            witness = z
            break

    passed = worst > 0.0 and consistent
    return Verdict(
        passed=passed,
        margin=worst,
        witness_z=None if passed else witness,
        samples_used=grid_r * grid_psi + 20,
    )


def re_bounds(dp: DominantParams, tol: float = 1e-13) -> tuple[float, float]:
    """Extremes of ``Re`` of the dominated functional over the whole disk:

        lower = A/B + (1 - A/B) 2F1(1, beta, beta+1; B)
        upper = A/B + (1 - A/B) 2F1(1, beta, beta+1; -B)          (B != 0)

    and ``1 -+ (beta/(beta+1)) A`` for B = 0.  For the half-plane target
    B = -1 the upper 2F1 argument hits +1 where the function diverges; the
    image is genuinely unbounded above and the upper bound is reported as inf.
    """
    if dp.beta < 0:
        raise ParameterError(f"bounds need beta >= 0, got {dp.beta}")
    A, B = dp.target.A, dp.target.B
    if B == 0.0:
        d = dp.beta / (dp.beta + 1.0) * A
        return 1.0 - d, 1.0 + d
    hp = HypergeomParams(1.0, dp.beta, dp.beta + 1.0)
    lower = A / B + (1.0 - A / B) * f21(hp, B, tol).real
    if B == -1.0:
        return lower, math.inf
    upper = A / B + (1.0 - A / B) * f21(hp, -B, tol).real
    return lower, upper


def modulus_bounds(dp: DominantParams, r: float,
                   tol: float = 1e-13) -> tuple[float, float]:
    """Modulus extremes of the de-rotated functional on ``|z| <= r``:

        A/B + (1 - A/B) 2F1(1, beta, beta+1; +-B r)               (B != 0)
        1 -+ (beta/(beta+1)) A r                                  (B  = 0)

    Nested inside the ``re_bounds`` interval and converging to it as r -> 1.
    """
    if dp.beta < 0:
        raise ParameterError(f"bounds need beta >= 0, got {dp.beta}")
    if not 0.0 <= r < 1.0:
        raise ParameterError(f"r must lie in [0, 1), got {r}")
    A, B = dp.target.A, dp.target.B
    if B == 0.0:
        d = dp.beta / (dp.beta + 1.0) * A * r
        return 1.0 - d, 1.0 + d
    hp = HypergeomParams(1.0, dp.beta, dp.beta + 1.0)
    lower = A / B + (1.0 - A / B) * f21(hp, B * r, tol).real
    upper = A / B + (1.0 - A / B) * f21(hp, -B * r, tol).real
    return lower, upper


def inclusion_interpolant(lambda1: float, lambda2: float, h1: complex,
                          h2: complex) -> complex:
    """Convex combination ``(l1/l2) h1 + (1 - l1/l2) h2`` for 0 <= l1 < l2.

    This is the interpolation step behind the class inclusion in the mixing
    weight: with h1, h2 inside a convex target the combination stays inside.
    """
    if not 0.0 <= lambda1 < lambda2:
        raise ParameterError(
            f"need 0 <= lambda1 < lambda2, got {lambda1}, {lambda2}"
        )
    t = lambda1 / lambda2
    return t * complex(h1) + (1.0 - t) * complex(h2)


def lambda_negative_identity(lam: complex, e1: complex, e2: complex) -> complex:
    """Rearrangement ``(1 + 1/lambda) e1 - (1/lambda) e2``.

    With e1 the fractional-power term and e2 the full class expression this
    recovers the ratio term; for real lambda <= -1 the two weights lie in
    [0, 1] and sum to 1, so the result is a convex combination.
    """
    lam = complex(lam)
    if lam == 0:
        raise ParameterError("lambda = 0 has no rearrangement")
    return (1.0 + 1.0 / lam) * complex(e1) - (1.0 / lam) * complex(e2)


def bound_report(theorem_id: str, dp: DominantParams,
                 bounds: tuple[float, float],
                 certificate_margin: Optional[float] = None) -> dict:
    """JSON-ready record for a certified bound pair."""
    return {
        "theorem_id": theorem_id,
        "params": {"A": dp.target.A, "B": dp.target.B, "beta": dp.beta},
        "lower": bounds[0],
        "upper": bounds[1],
        "certificate_margin": certificate_margin,
    }


def briot_bouquet_target(A: float, B: float, lam: float, mu: float, k: float,
                         z: complex, statement_variant: bool = False) -> complex:
    """Perturbed target ``(1+Az)/(1+Bz) + coef (A-B) z/(1+Bz)^2``.

    The consistent perturbation coefficient is ``lambda/(mu k)`` (the factor
    multiplying z p'(z) in the governing differential expression);
    ``statement_variant=True`` evaluates the transposed coefficient
    ``lambda mu / k`` for comparison.
    """
    MobiusTarget(A, B)
    if mu * k == 0:
        raise ParameterError("mu*k = 0 leaves the perturbation undefined")
    z = complex(z)
    coef = lam * mu / k if statement_variant else lam / (mu * k)
    return (1.0 + A * z) / (1.0 + B * z) + coef * (A - B) * z / (1.0 + B * z) ** 2
