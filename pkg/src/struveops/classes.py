"""Membership functionals and numeric subordination testing.

Subordination to a Möbius map ``(1+Az)/(1+Bz)`` is decided by region
containment: the map is univalent with known convex image (a disk for B > -1,
the half-plane Re w > (1-A)/2 for B = -1), so a functional belongs to the
class iff its sampled values stay inside that image.  Verdicts carry the worst
signed margin and a witness point on failure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .errors import DomainError, ParameterError
from .operator import apply_s
from .series import PowerSeries
from .specialfn import StruveParams

#: Sampling circles used by default: |z| = 0.1 .. 0.9 step 0.1, then 0.95.
DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95)

#: Absolute containment tolerance on margins; boundary contact counts as pass.
CONTAINMENT_TOL = 1e-9


@dataclass(frozen=True)
class MobiusTarget:
    """Target geometry of ``(1+Az)/(1+Bz)`` with -1 <= B < A <= 1.

    For B > -1 the unit disk maps onto the disk with center (1-AB)/(1-B^2)
    and radius (A-B)/(1-B^2); for B = -1 onto the half-plane
    Re w > (1-A)/2.  Either way the image contains 1 = value at z=0.
    """

    A: float
    B: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", float(self.A))
        object.__setattr__(self, "B", float(self.B))
        if not (-1.0 <= self.B < self.A <= 1.0):
            raise ParameterError(
                f"Möbius target needs -1 <= B < A <= 1, got A={self.A}, B={self.B}"
            )

    @property
    def is_half_plane(self) -> bool:
        return self.B == -1.0

    @property
    def center(self) -> float:
        if self.is_half_plane:
            raise ParameterError("half-plane target has no disk center")
        return (1.0 - self.A * self.B) / (1.0 - self.B * self.B)

    @property
    def radius(self) -> float:
        if self.is_half_plane:
            raise ParameterError("half-plane target has no disk radius")
        return (self.A - self.B) / (1.0 - self.B * self.B)

    @property
    def half_plane_edge(self) -> float:
        return (1.0 - self.A) / 2.0

    def phi(self, z: complex) -> complex:
        """The target map itself, ``(1+Az)/(1+Bz)``."""
        z = complex(z)
        return (1.0 + self.A * z) / (1.0 + self.B * z)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a containment test.

    ``margin`` is the worst signed distance to the target boundary (negative
    when violated); ``witness_z`` locates the worst sample on failure.  The
    test passes when the margin clears ``-CONTAINMENT_TOL``.
    """

    passed: bool
    margin: float
    witness_z: Optional[complex] = None
    samples_used: int = 0

    def to_json(self) -> dict:
        witness = None
        if self.witness_z is not None:
            witness = [self.witness_z.real, self.witness_z.imag]
        return {
            "passed": self.passed,
            "witness": witness,
            "margin": self.margin,
            "samples_used": self.samples_used,
        }


@dataclass(frozen=True)
class ClassParams:
    """Parameters of the membership functional.

    ``alpha`` is the rotation angle (|alpha| < pi/2 so cos(alpha) > 0),
    ``lam`` the complex mixing weight, ``mu`` the fractional power in (0, 1);
    ``struve`` fixes the operator pair (index k and k+1) and ``target`` the
    Möbius image the functional must stay inside.
    """

    alpha: float
    lam: complex
    mu: float
    struve: StruveParams
    target: MobiusTarget

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", float(self.mu))
        if not abs(self.alpha) < math.pi / 2:
            raise ParameterError(f"|alpha| must be < pi/2, got {self.alpha}")
        if not 0.0 < self.mu < 1.0:
            raise ParameterError(f"mu must lie in (0, 1), got {self.mu}")


def power_mu(w: complex, mu: float) -> complex:
    """Principal-branch fractional power ``exp(mu Log w)``; rejects w = 0."""
    w = complex(w)
    if w == 0:
        raise DomainError("fractional power of 0 rejected")
    return cmath.exp(mu * cmath.log(w))


def _shifted_horner(s: PowerSeries, z: complex) -> complex:
    # Evaluates S f(z) / z, i.e. the series with the leading zero dropped.
    acc = 0j
    for c in reversed(s.coeffs[1:]):
        acc = acc * z + c
    return acc


def expression_evaluator(cp: ClassParams, f: PowerSeries) -> Callable[[complex], complex]:
    """Build the pointwise class functional once for repeated evaluation.

    Both operator images are computed a single time; the returned closure
    evaluates

        e^(i alpha) { (1+lam) (z/S_{k+1}f)^mu
                      - lam (S_k f / S_{k+1} f) (z/S_{k+1}f)^mu }

    using the z-shifted series, which makes z = 0 regular with value
    e^(i alpha) instead of a removable singularity.
    """
    s_lo = apply_s(cp.struve, f)
    s_hi = apply_s(cp.struve.shifted(), f)
    eia = complex(math.cos(cp.alpha), math.sin(cp.alpha))
    lam = cp.lam
    mu = cp.mu

    def evaluate_at(z: complex) -> complex:
        z = complex(z)
        den = _shifted_horner(s_hi, z)
        if abs(den) < 1e-12:
            raise DomainError(f"S_(k+1) f vanishes at z = {z}")
        num = _shifted_horner(s_lo, z)
        pm = power_mu(1.0 / den, mu)
        return eia * ((1.0 + lam) * pm - lam * (num / den) * pm)

    return evaluate_at


def class_expression(cp: ClassParams, f: PowerSeries, z: complex) -> complex:
    """The rotated membership expression at a single point (see above)."""
    return expression_evaluator(cp, f)(z)


def j_functional(cp: ClassParams, f: PowerSeries, z: complex) -> complex:
    """De-rotated functional ``(expression - i sin alpha) / cos alpha``.

    Equals the class expression itself when alpha = 0 and is identically 1
    for f(z) = z regardless of the remaining parameters.
    """
    value = class_expression(cp, f, z)
    return (value - 1j * math.sin(cp.alpha)) / math.cos(cp.alpha)


def mobius_image_check(target: MobiusTarget, w: complex) -> float:
    """Signed margin of ``w`` against the target image boundary.

    Disk targets: radius - |w - center|; half-plane: Re w - (1-A)/2.
    Positive means interior.
    """
    w = complex(w)
    if target.is_half_plane:
        return w.real - target.half_plane_edge
    return target.radius - abs(w - target.center)


def iter_membership_samples(
    cp: ClassParams,
    f: PowerSeries,
    radii: Sequence[float] = DEFAULT_RADII,
    points_per_circle: int = 720,
) -> Iterator[tuple[complex, complex, float]]:
    """Yield ``(z, J(z), margin)`` over the sampling circles."""
    if not radii:
        raise ParameterError("need at least one sampling radius")
    if any(not 0.0 < r < 1.0 for r in radii):
        raise ParameterError("sampling radii must lie in (0, 1)")
    if any(r2 <= r1 for r1, r2 in zip(radii, radii[1:])):
        raise ParameterError("sampling radii must be strictly ascending")
    if points_per_circle < 1:
        raise ParameterError("points_per_circle must be >= 1")
    evaluate_at = expression_evaluator(cp, f)
    sin_a = math.sin(cp.alpha)
    cos_a = math.cos(cp.alpha)
    step = 2.0 * math.pi / points_per_circle
    for r in radii:
        for j in range(points_per_circle):
            z = r * cmath.exp(1j * (step * j))
            value = (evaluate_at(z) - 1j * sin_a) / cos_a
            yield z, value, mobius_image_check(cp.target, value)


def verdict_from_margins(
    samples: Iterator[tuple[complex, complex, float]],
    tol: float = CONTAINMENT_TOL,
) -> Verdict:
    """Min-reduce sampled margins into a Verdict (order-independent)."""
    worst = math.inf
    worst_z: Optional[complex] = None
    count = 0
    for z, _, margin in samples:
        count += 1
        if margin < worst:
            worst = margin
            worst_z = z
    passed = worst >= -tol
    return Verdict(
        passed=passed,
        margin=worst,
        witness_z=None if passed else worst_z,
        samples_used=count,
    )


def membership_test(
    cp: ClassParams,
    f: PowerSeries,
    radii: Sequence[float] = DEFAULT_RADII,
    points_per_circle: int = 720,
    tol: float = CONTAINMENT_TOL,
) -> Verdict:
    """Sample the de-rotated functional on circles and check containment."""
    return verdict_from_margins(
        iter_membership_samples(cp, f, radii, points_per_circle), tol
    )


def lemma6_check(
    inner: MobiusTarget, outer: MobiusTarget, tol: float = CONTAINMENT_TOL
) -> Verdict:
    """Certify that the inner Möbius image sits inside the outer one.

    Requires the nested ordering B_outer <= B_inner < A_inner <= A_outer;
    containment is then exact geometry (disk-in-disk, disk-in-half-plane or
    half-plane-in-half-plane) and the margin is its slack.
    """
    if not (outer.B <= inner.B and inner.A <= outer.A):
        raise ParameterError(
            "nesting needs B_outer <= B_inner < A_inner <= A_outer, got "
            f"inner=({inner.A}, {inner.B}), outer=({outer.A}, {outer.B})"
        )
    if outer.is_half_plane:
        if inner.is_half_plane:
            margin = inner.half_plane_edge - outer.half_plane_edge
            witness = complex(inner.half_plane_edge, 0.0)
        else:
            margin = (inner.center - inner.radius) - outer.half_plane_edge
            witness = complex(inner.center - inner.radius, 0.0)
    else:
        # inner half-plane inside a disk is impossible, but the ordering
        # B_outer <= B_inner already rules it out (B_inner = -1 forces
        # B_outer = -1).
        gap = inner.center - outer.center
        margin = outer.radius - (abs(gap) + inner.radius)
        direction = 1.0 if gap >= 0 else -1.0
        witness = complex(inner.center + direction * inner.radius, 0.0)
    passed = margin >= -tol
    return Verdict(
        passed=passed,
        margin=margin,
        witness_z=None if passed else witness,
        samples_used=1,
    )


def lemma3_check(
    target: MobiusTarget,
    f_vals: Sequence[complex],
    g_vals: Sequence[complex],
    sigma: float,
    points: Optional[Sequence[complex]] = None,
    tol: float = CONTAINMENT_TOL,
) -> Verdict:
    """Certify convex-combination containment on a shared sample set.

    ``f_vals`` and ``g_vals`` are sampled values that must individially lie in
    the target image (violations are precondition errors, not verdicts); the
    verdict covers ``sigma*f + (1-sigma)*g``.  Convexity of the image makes
    this analytically guaranteed -- the check validates the sampling pipeline.
    """
    if not 0.0 <= sigma <= 1.0:
        raise ParameterError(f"sigma must lie in [0, 1], got {sigma}")
    if len(f_vals) != len(g_vals):
        raise ParameterError("sample sets must have equal length")
    if points is not None and len(points) != len(f_vals):
        raise ParameterError("points must match the sample sets in length")
    for name, vals in (("f", f_vals), ("g", g_vals)):
        worst = min(mobius_image_check(target, w) for w in vals)
        if worst < -tol:
            raise ParameterError(
                f"precondition violated: {name} leaves the target (margin {worst:g})"
            )
    worst = math.inf
    worst_at: Optional[complex] = None
    for i, (fw, gw) in enumerate(zip(f_vals, g_vals)):
        margin = mobius_image_check(target, sigma * fw + (1.0 - sigma) * gw)
        if margin < worst:
            worst = margin
            worst_at = complex(points[i]) if points is not None else None
    passed = worst >= -tol
    return Verdict(
        passed=passed,
        margin=worst,
        witness_z=None if passed else worst_at,
        samples_used=len(f_vals),
    )
