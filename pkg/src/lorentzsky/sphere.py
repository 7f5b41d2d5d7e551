"""The Riemann sphere in homogeneous coordinates, projections, and Mobius maps.

A point is a pair (z1 : z2), never both zero, normalized to unit length;
the affine coordinate is z = z1/z2 and the pair (1 : 0) is the point at
infinity (the south pole of the stereographic picture).  Keeping the pair
rather than z itself makes the Mobius action, the antipodal map, and the
south pole entirely regular.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import InfinityPoint, NotOnSphere
from .spin import SL2CElement

#: Two points are identified when |z1 w2 - z2 w1| is below this.
PHASE_TOL = 1e-10

_INFINITY_EPS = 1e-14
_NORM_SKIP = 1e-14


@dataclass(frozen=True)
class PolarAngles:
    """Colatitude theta in [0, pi] and azimuth phi in [0, 2 pi)."""

    theta: float
    phi: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        object.__setattr__(self, "phi", float(self.phi))
        if not -1e-12 <= self.theta <= math.pi + 1e-12:
            raise ValueError(f"theta = {self.theta} outside [0, pi]")
        if not -1e-12 <= self.phi < 2.0 * math.pi + 1e-12:
            raise ValueError(f"phi = {self.phi} outside [0, 2 pi)")


@dataclass(frozen=True)
class SpherePoint:
    """Homogeneous pair (z1 : z2), stored with |z1|^2 + |z2|^2 = 1."""

    z1: complex
    z2: complex

    def __post_init__(self):
        z1, z2 = complex(self.z1), complex(self.z2)
        norm = math.hypot(abs(z1), abs(z2))
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError("homogeneous coordinates must be finite and not both zero")
        # Skip the division when already normalized so that exact identity
        # maps stay bit-identical.
        if abs(norm - 1.0) > _NORM_SKIP:
            z1, z2 = z1 / norm, z2 / norm
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    @classmethod
    def from_complex(cls, z: complex) -> "SpherePoint":
        z = complex(z)
        if cmath.isinf(z):
            return cls.infinity()
        # Scale before normalizing so huge |z| cannot overflow |z|^2.
        if abs(z) > 1.0:
            return cls(1.0, 1.0 / z)
        return cls(z, 1.0)

    @classmethod
    def infinity(cls) -> "SpherePoint":
        return cls(1.0, 0.0)

    @property
    def is_infinity(self) -> bool:
        return abs(self.z2) <= _INFINITY_EPS

    def to_complex(self) -> complex:
        if self.is_infinity:
            raise InfinityPoint("the point at infinity has no affine coordinate")
        return self.z1 / self.z2

    def distance_to(self, other: "SpherePoint") -> float:
        """Projective distance |z1 w2 - z2 w1|; zero iff equal up to phase."""
        return abs(self.z1 * other.z2 - self.z2 * other.z1)

    def approx_equal(self, other: "SpherePoint", tol: float = PHASE_TOL) -> bool:
        return self.distance_to(other) <= tol


def from_polar(p: PolarAngles) -> SpherePoint:
    """z = e^{i phi} tan(theta/2); theta = pi lands on the point at infinity."""
    half = 0.5 * p.theta
    return SpherePoint(math.sin(half) * cmath.exp(1j * p.phi), math.cos(half))


def to_polar(q: SpherePoint) -> PolarAngles:
    """Inverse of :func:`from_polar`; phi is reported as 0 at either pole."""
    theta = 2.0 * math.atan2(abs(q.z1), abs(q.z2))
    w = q.z1 * q.z2.conjugate()
    phi = math.atan2(w.imag, w.real) % (2.0 * math.pi) if abs(w) > 0.0 else 0.0
    return PolarAngles(min(max(theta, 0.0), math.pi), phi)


def stereo_project(x1: float, x2: float, x3: float, r: float) -> SpherePoint:
    """Projection through the south pole: z = (x1 + i x2)/(r + x3).

    The input must satisfy x1^2 + x2^2 + x3^2 = r^2 within 1e-9 r^2; the
    south pole itself maps to the point at infinity.
    """
    if r <= 0:
        raise NotOnSphere("radius must be positive")
    if abs(x1 * x1 + x2 * x2 + x3 * x3 - r * r) > 1e-9 * r * r:
        raise NotOnSphere(f"({x1}, {x2}, {x3}) is not on the sphere of radius {r}")
    # Equivalent homogeneous forms; pick the one whose second slot is large.
    if x3 >= 0.0:
        return SpherePoint(complex(x1, x2), complex(r + x3))
    return SpherePoint(complex(r - x3), complex(x1, -x2))


def inverse_stereo(q: SpherePoint, r: float) -> tuple[float, float, float]:
    """Cartesian point of the sphere of radius r with stereographic image q."""
    if r <= 0:
        raise NotOnSphere("radius must be positive")
    w = q.z1 * q.z2.conjugate()
    return (2.0 * r * w.real,
            2.0 * r * w.imag,
            r * (abs(q.z2) ** 2 - abs(q.z1) ** 2))


def antipode(q: SpherePoint) -> SpherePoint:
    """Antipodal map z -> -1/conj(z); an involution (up to phase)."""
    return SpherePoint(-q.z2.conjugate(), q.z1.conjugate())


def sphere_metric_factor(q: SpherePoint, r: float) -> float:
    """Round-metric conformal factor 4 r^2 / (1 + z conj(z))^2 at a finite point."""
    if q.is_infinity:
        raise InfinityPoint("metric factor in the affine chart needs a finite point")
    if r <= 0:
        raise ValueError("radius must be positive")
    return 4.0 * r * r * abs(q.z2) ** 4


@dataclass(frozen=True)
class MoebiusTransform:
    """Orientation-preserving conformal map z -> (a z + b)/(c z + d), ad - bc = 1.

    Acts on homogeneous pairs, so the point at infinity needs no special
    handling; s and -s define the same map.
    """

    s: SL2CElement

    @classmethod
    def identity(cls) -> "MoebiusTransform":
        return cls(SL2CElement.identity())

    @classmethod
    def translation(cls, b: complex) -> "MoebiusTransform":
        return cls(SL2CElement(1.0, b, 0.0, 1.0))

    @classmethod
    def rotation(cls, theta: float) -> "MoebiusTransform":
        """z -> e^{-i theta} z."""
        half = cmath.exp(-0.5j * theta)
        return cls(SL2CElement(half, 0.0, 0.0, 1.0 / half))

    @classmethod
    def dilation(cls, chi: float) -> "MoebiusTransform":
        """z -> e^{-chi} z; contraction toward z = 0 for chi > 0."""
        half = math.exp(-0.5 * chi)
        return cls(SL2CElement(half, 0.0, 0.0, 1.0 / half))

    @classmethod
    def special(cls, b: complex) -> "MoebiusTransform":
        """z -> -b^2/z, swapping the poles; b must be non-zero."""
        b = complex(b)
        if b == 0:
            raise ValueError("special conformal parameter must be non-zero")
        return cls(SL2CElement(0.0, -b, 1.0 / b, 0.0))

    def apply(self, q: SpherePoint) -> SpherePoint:
        s = self.s
        return SpherePoint(s.a * q.z1 + s.b * q.z2, s.c * q.z1 + s.d * q.z2)

    def apply_complex(self, z: complex) -> complex:
        """Affine-chart action; returns complex infinity at the map's pole."""
        image = self.apply(SpherePoint.from_complex(z))
        if image.is_infinity:
            return complex(math.inf, 0.0)
        return image.to_complex()

    def compose(self, other: "MoebiusTransform") -> "MoebiusTransform":
        return MoebiusTransform(self.s @ other.s)

    def inverse(self) -> "MoebiusTransform":
        return MoebiusTransform(self.s.inverse())


def moebius_apply(t: MoebiusTransform, q: SpherePoint) -> SpherePoint:
    return t.apply(q)


def moebius_compose(t1: MoebiusTransform, t2: MoebiusTransform) -> MoebiusTransform:
    """Composition acting as t1 after t2."""
    return t1.compose(t2)


def moebius_invert(t: MoebiusTransform) -> MoebiusTransform:
    return t.inverse()
