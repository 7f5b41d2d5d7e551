"""Bondi coordinates and the Lorentz action on the sphere of directions.

Bondi coordinates (u, r, q) label an event by its advanced time u = x0 + r,
its distance r from the spatial origin, and the stereographic image q of
its direction.  At fixed u and r -> infinity the exact Lorentz action on
(u, r, q) converges, with O(1/r) corrections, to a Mobius map of q plus
angle-dependent rescalings of r and u.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (NotNull, NotOrthochronous, OriginDirectionUndefined)
from .minkowski import FourVector, LorentzMatrix, Rapidity, interval_squared
from .sphere import MoebiusTransform, SpherePoint, inverse_stereo, stereo_project
from .spin import SL2CElement

_NULL_TOL = 1e-9
_ORIGIN_EPS = 1e-300


@dataclass(frozen=True)
class BondiPoint:
    """Advanced time u, radius r >= 0, and direction q on the sphere."""

    u: float
    r: float
    q: SpherePoint

    def __post_init__(self):
        object.__setattr__(self, "u", float(self.u))
        object.__setattr__(self, "r", float(self.r))
        if not (math.isfinite(self.u) and math.isfinite(self.r)):
            raise ValueError("u and r must be finite")
        if self.r < 0:
            raise ValueError("r must be non-negative")


def bondi_from_inertial(x: FourVector) -> BondiPoint:
    """(u, r, q) of an event; undefined at the spatial origin."""
    r = float(np.linalg.norm(x.spatial))
    if r <= _ORIGIN_EPS:
        raise OriginDirectionUndefined("the spatial origin has no direction")
    return BondiPoint(x.x0 + r, r, stereo_project(x.x1, x.x2, x.x3, r))


def inertial_from_bondi(b: BondiPoint) -> FourVector:
    """Inverse of :func:`bondi_from_inertial`."""
    x1, x2, x3 = inverse_stereo(b.q, b.r) if b.r > 0 else (0.0, 0.0, 0.0)
    return FourVector(b.u - b.r, x1, x2, x3)


def act_exact(lam: LorentzMatrix, b: BondiPoint) -> BondiPoint:
    """Exact finite-radius action: through inertial coordinates and back."""
    return bondi_from_inertial(lam.apply(inertial_from_bondi(b)))


@dataclass(frozen=True)
class AsymptoticAction:
    """Leading r -> infinity behavior of the action of a spin element.

    The direction moves by the Mobius map of the same (a, b, c, d); the
    radius is rescaled by ``radial_factor`` and advanced time by
    ``time_factor``, its reciprocal.
    """

    moebius: MoebiusTransform

    def radial_factor(self, z: complex) -> float:
        """F(z) = (|a z + b|^2 + |c z + d|^2) / (1 + z conj(z)); r' ~ r F."""
        s = self.moebius.s
        zz = (z * z.conjugate()).real
        return (abs(s.a * z + s.b) ** 2 + abs(s.c * z + s.d) ** 2) / (1.0 + zz)

    def time_factor(self, z: complex) -> float:
        """Advanced-time rescaling u' ~ u / F(z).

        The reciprocal of the radial factor: writing the event as
        u q + r w with q the image of the time axis and w the image of the
        ingoing null direction, metric orthogonality q . w = 1 forces the
        finite part of u' = x0' + r' to be u / F exactly.
        """
        return 1.0 / self.radial_factor(z)


def act_asymptotic(s: SL2CElement) -> AsymptoticAction:
    """Asymptotic action of the spin element s on (u, r, z)."""
    return AsymptoticAction(MoebiusTransform(s))


def aberrate(chi: Rapidity, theta: float) -> float:
    """Apparent colatitude after a boost of rapidity chi toward theta = 0.

    Half-angle law tan(theta'/2) = e^{-chi} tan(theta/2); both poles are
    fixed points.  theta is the angle between the boost direction and the
    line of sight to the source.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta = {theta} outside [0, pi]")
    if theta == math.pi:
        return math.pi
    half = 0.5 * theta
    return 2.0 * math.atan2(math.exp(-chi) * math.sin(half), math.cos(half))


def doppler(chi: Rapidity, theta: float) -> float:
    """Frequency ratio E'/E = cosh chi + sinh chi cos theta; always positive.

    theta is measured from the boost direction to the line of sight, so a
    source dead ahead (theta = 0) is blueshifted by e^chi.  Evaluated in
    the half-angle form e^chi cos^2(theta/2) + e^-chi sin^2(theta/2),
    which has no cancellation and is manifestly positive.
    """
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta = {theta} outside [0, pi]")
    if chi == 0.0:
        return 1.0
    half = 0.5 * theta
    return (math.exp(chi) * math.cos(half) ** 2
            + math.exp(-chi) * math.sin(half) ** 2)


@dataclass(frozen=True)
class Photon4Momentum:
    """Light-like four-momentum with positive energy E = p0."""

    p: FourVector

    def __post_init__(self):
        e = self.p.x0
        if e <= 0:
            raise NotNull(f"photon energy must be positive, got {e}")
        if abs(interval_squared(self.p)) > _NULL_TOL * e * e:
            raise NotNull(f"four-momentum is not null: p^2 = {interval_squared(self.p):.3e}")

    @property
    def energy(self) -> float:
        return self.p.x0


def boost_photon(lam: LorentzMatrix, photon: Photon4Momentum) -> Photon4Momentum:
    """p -> lam . p; orthochronous matrices keep the energy positive."""
    if lam.entries[0, 0] < 0:
        raise NotOrthochronous("photon transport needs an orthochronous matrix")
    return Photon4Momentum(lam.apply(photon.p))
