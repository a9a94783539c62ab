"""Branch-cut bookkeeping for the monodromy scalars of graded compositions.

The fixed branch of logarithm is ``log z = log|z| + i arg z`` with
``0 <= arg z < 2 pi`` (cut along the positive real axis).  The integer
``p(z1, z2)`` measures the failure of additivity of this branch across

    log(z1 - z2) = log z1 + log(1 - z2/z1) + 2 pi i p,

where the last log is principal (series branch, valid since ``|z2/z1| < 1``
puts ``1 - z2/z1`` in the right half plane).  Path winding is normalized so
that the clockwise unit loop has winding +1, which makes the transport
scalar ``(Omega(a1,a2) Omega(a2,a1))^{-p}`` of that loop equal the composite
of the two braidings, the loop identity that fixes the sign convention.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .abgroup import GroupElt
from .cocycle import AbelianCocycle
from .errors import ConsistencyError, DomainError, StructuralError
from .unitscalar import UnitScalar

P_INT_RESIDUAL_TOL = 1e-6


def cut_arg(z: complex) -> float:
    """Argument of ``z`` in ``[0, 2 pi)``."""
    if z == 0:
        raise DomainError("argument of 0 is undefined")
    phi = cmath.phase(z)  # (-pi, pi]
    return phi if phi >= 0 else phi + 2 * math.pi


def plog(z: complex) -> complex:
    """``log|z| + i arg z`` with ``arg z`` in ``[0, 2 pi)``."""
    if z == 0:
        raise DomainError("log of 0 is undefined")
    return complex(math.log(abs(z)), cut_arg(z))


def p_int(z1: complex, z2: complex) -> int:
    """The integer in ``log(z1 - z2) = log z1 + log(1 - z2/z1) + 2 pi i p``.

    Requires ``|z1| > |z2| > 0`` and ``z1 != z2``.  The pre-rounding residual
    must be below ``1e-6`` or a consistency error is raised.
    """
    if not abs(z1) > abs(z2):
        raise DomainError(f"need |z1| > |z2|: |{z1}| = {abs(z1)} <= |{z2}| = {abs(z2)}")
    if z2 == 0:
        raise DomainError("need |z2| > 0")
    if z1 == z2:
        raise DomainError("need z1 != z2")
    w = plog(z1 - z2) - plog(z1) - cmath.log(1 - z2 / z1)
    p = round(w.imag / (2 * math.pi))
    residual = abs(w - 2j * math.pi * p)
    if residual > P_INT_RESIDUAL_TOL:
        raise ConsistencyError(f"branch mismatch residual {residual:.2e} at ({z1}, {z2})")
    return int(p)


def _check_nested_region(z1: complex, z2: complex) -> None:
    if not abs(z1) > abs(z2):
        raise DomainError(f"region violated: |z1| = {abs(z1)} <= |z2| = {abs(z2)}")
    if not abs(z2) > abs(z1 - z2):
        raise DomainError(f"region violated: |z2| = {abs(z2)} <= |z1 - z2| = {abs(z1 - z2)}")
    if z1 == z2:
        raise DomainError("region violated: |z1 - z2| = 0")


def assoc_scalar(
    cocycle: AbelianCocycle,
    z1: complex,
    z2: complex,
    a1: GroupElt,
    a2: GroupElt,
    a3: GroupElt,
) -> UnitScalar:
    """The scalar relating the iterate of two graded compositions to their
    product on the region ``|z1| > |z2| > |z1 - z2| > 0``:

        (Omega(a1,a2) Omega(a2,a1))^{-p(z1,z2)}
      * (Omega(a1,a3) Omega(a3,a1))^{+p(z2,z2-z1)}
      * F(a1,a2,a3)^{-1}

    Exact: the two integer exponents weight the bilinear-form lifts.
    """
    _check_nested_region(z1, z2)
    p12 = p_int(z1, z2)
    p2 = p_int(z2, z2 - z1)
    exponent = (
        -p12 * cocycle.b(a1, a2)
        + p2 * cocycle.b(a1, a3)
        - cocycle.f(a1, a2, a3).exponent
    )
    return UnitScalar(exponent)


@dataclass(frozen=True)
class PathPolyline:
    """A polyline in the punctured plane; no waypoint or segment touches 0."""

    waypoints: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(complex(w) for w in self.waypoints)
        if not pts:
            raise StructuralError("a path needs at least one waypoint")
        if any(w == 0 for w in pts):
            raise StructuralError("waypoints must avoid the origin")
        for a, b in zip(pts, pts[1:]):
            if _segment_origin_distance(a, b) <= 0.0:
                raise StructuralError(f"segment {a} -> {b} passes through the origin")
        object.__setattr__(self, "waypoints", pts)

    @property
    def start(self) -> complex:
        return self.waypoints[0]

    @property
    def end(self) -> complex:
        return self.waypoints[-1]

    def concatenate(self, other: PathPolyline) -> PathPolyline:
        if self.end != other.start:
            raise StructuralError("paths can only be concatenated end-to-start")
        return PathPolyline(self.waypoints + other.waypoints[1:])


def _segment_origin_distance(a: complex, b: complex) -> float:
    d = b - a
    if d == 0:
        return abs(a)
    t = -(a.real * d.real + a.imag * d.imag) / (abs(d) ** 2)
    t = min(1.0, max(0.0, t))
    return abs(a + t * d)


def winding(path: PathPolyline) -> int:
    """Branch-correction integer of the path, relative to the positive-real cut.

    Tracking the argument continuously along the path, the branch of log at
    the start determined by the fixed branch at the end is
    ``plog(start) + 2 pi i winding``.  Each straight segment off the origin
    subtends less than pi, so its principal argument increment is exact.
    Sign convention: the clockwise unit loop has winding +1.
    """
    total = 0.0
    for a, b in zip(path.waypoints, path.waypoints[1:]):
        total += cmath.phase(b / a)
    raw = (cut_arg(path.end) - cut_arg(path.start) - total) / (2 * math.pi)
    p = round(raw)
    if abs(raw - p) > P_INT_RESIDUAL_TOL:
        raise ConsistencyError(f"winding accumulation {raw} is not an integer")
    return int(p)


def transport_scalar(
    cocycle: AbelianCocycle, path: PathPolyline, a1: GroupElt, a2: GroupElt
) -> UnitScalar:
    """Parallel-transport scalar ``(Omega(a1,a2) Omega(a2,a1))^{-p}`` for the
    path's branch-correction integer ``p``, as exact exponent arithmetic."""
    p = winding(path)
    return UnitScalar(-p * cocycle.b(a1, a2))


def clockwise_unit_loop() -> PathPolyline:
    """A square polyline realization of the clockwise unit loop based at 1."""
    return PathPolyline((1, -1j, -1, 1j, 1))
