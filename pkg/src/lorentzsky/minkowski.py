"""Four-vectors, the Minkowski interval, and Lorentz-matrix algebra.

Everything here works in units where c = 1: velocities are fractions of
the speed of light, rapidities are dimensionless, and x0 = ct carries
units of length.  Signature convention is (-,+,+,+).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import BadAxis, NotLorentz, SpeedLimit

DEFAULT_TOL = 1e-9

#: Metric matrix diag(-1, 1, 1, 1).
METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])
METRIC.setflags(write=False)

#: Rapidity is the additive boost parameter; a plain dimensionless float.
Rapidity = float


@dataclass(frozen=True)
class FourVector:
    """Spacetime displacement (x0, x1, x2, x3), all components in length units."""

    x0: float
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"four-vector component {name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))

    @classmethod
    def from_array(cls, arr: Iterable[float]) -> "FourVector":
        a = np.asarray(arr, dtype=float).reshape(4)
        return cls(a[0], a[1], a[2], a[3])

    def as_array(self) -> np.ndarray:
        return np.array([self.x0, self.x1, self.x2, self.x3])

    @property
    def spatial(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "FourVector":
        return FourVector(-self.x0, -self.x1, -self.x2, -self.x3)


def interval_squared(dx: FourVector) -> float:
    """Squared interval -dx0^2 + dx1^2 + dx2^2 + dx3^2 (length squared)."""
    return -dx.x0 * dx.x0 + dx.x1 * dx.x1 + dx.x2 * dx.x2 + dx.x3 * dx.x3


class ComponentLabel(Enum):
    """The four connected components, keyed by (sign det, sign of the 0-0 entry)."""

    PROPER_ORTHOCHRONOUS = "ProperOrthochronous"
    PROPER_ANTICHRONOUS = "ProperAntichronous"
    IMPROPER_ORTHOCHRONOUS = "ImproperOrthochronous"
    IMPROPER_ANTICHRONOUS = "ImproperAntichronous"


@dataclass(frozen=True, eq=False)
class LorentzMatrix:
    """A validated 4x4 matrix M with M^T eta M = eta within ``tol`` (max-norm).

    Construction raises :class:`NotLorentz` when the metric-preservation
    residual exceeds ``tol``; |det| and |M00| are also checked, which pins
    down the component structure.  Instances are immutable.
    """

    entries: np.ndarray
    tol: float = DEFAULT_TOL
    residual: float = field(init=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LorentzMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")
        m = np.array(self.entries, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise NotLorentz(math.inf, "matrix has non-finite entries")
        residual = float(np.abs(m.T @ METRIC @ m - METRIC).max())
        if residual > self.tol:
            raise NotLorentz(residual)
        if abs(abs(float(np.linalg.det(m))) - 1.0) > self.tol:
            raise NotLorentz(residual, "determinant is not +-1 within tolerance")
        if abs(m[0, 0]) < 1.0 - self.tol:
            raise NotLorentz(residual, "0-0 entry has magnitude below 1")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)
        object.__setattr__(self, "residual", residual)

    @property
    def det(self) -> float:
        return float(np.linalg.det(self.entries))

    def component(self) -> ComponentLabel:
        return classify_component(self)

    def apply(self, x: FourVector) -> FourVector:
        return FourVector.from_array(self.entries @ x.as_array())

    def inverse(self) -> "LorentzMatrix":
        # eta M^T eta is the exact inverse of a metric-preserving matrix.
        return LorentzMatrix(METRIC @ self.entries.T @ METRIC, self.tol)

    def __matmul__(self, other: "LorentzMatrix") -> "LorentzMatrix":
        product = self.entries @ other.entries
        # The metric residual of a product grows with the squared entry
        # scale even when both factors are exact; loosen proportionally.
        scale = float(np.abs(product).max())
        tol = max(self.tol, other.tol) * max(1.0, scale * scale)
        return LorentzMatrix(product, tol)


def validate_lorentz(m: np.ndarray | Iterable[Iterable[float]],
                     tol: float = DEFAULT_TOL) -> LorentzMatrix:
    """Accept ``m`` as a Lorentz matrix or raise :class:`NotLorentz`."""
    return LorentzMatrix(np.asarray(m, dtype=float), tol)


def classify_component(lam: LorentzMatrix) -> ComponentLabel:
    """Component from the signs of det and of the 0-0 entry.

    The determinant sign is resolvable while the condition number e^(2 chi)
    stays below 1/eps, i.e. rapidity below ~17; beyond that double
    precision cannot distinguish the components at all.
    """
    proper = lam.det > 0
    orthochronous = lam.entries[0, 0] > 0
    if proper:
        return (ComponentLabel.PROPER_ORTHOCHRONOUS if orthochronous
                else ComponentLabel.PROPER_ANTICHRONOUS)
    return (ComponentLabel.IMPROPER_ORTHOCHRONOUS if orthochronous
            else ComponentLabel.IMPROPER_ANTICHRONOUS)


def apply(lam: LorentzMatrix, x: FourVector) -> FourVector:
    """Matrix action x -> lam . x."""
    return lam.apply(x)


@dataclass(frozen=True)
class PoincareTransform:
    """Inhomogeneous transformation x -> lorentz . x + translation."""

    lorentz: LorentzMatrix
    translation: FourVector

    @classmethod
    def identity(cls) -> "PoincareTransform":
        return cls(validate_lorentz(np.eye(4)), FourVector(0.0, 0.0, 0.0, 0.0))

    def apply(self, x: FourVector) -> FourVector:
        return self.lorentz.apply(x) + self.translation

    def inverse(self) -> "PoincareTransform":
        inv = self.lorentz.inverse()
        return PoincareTransform(inv, -inv.apply(self.translation))


def poincare_compose(g: PoincareTransform, gp: PoincareTransform) -> PoincareTransform:
    """Semi-direct product law (L, a) . (L', a') = (L L', a + L a')."""
    return PoincareTransform(g.lorentz @ gp.lorentz,
                             g.translation + g.lorentz.apply(gp.translation))


def gamma(v: float) -> float:
    """Time-dilation factor 1/sqrt(1 - v^2) for |v| < 1 (units of c)."""
    if abs(v) >= 1.0:
        raise SpeedLimit(f"|v| = {abs(v)} must be below 1 (units of c)")
    return 1.0 / math.sqrt(1.0 - v * v)


def rapidity_from_velocity(v: float) -> Rapidity:
    """chi = argtanh(v), the additive boost parameter."""
    if abs(v) >= 1.0:
        raise SpeedLimit(f"|v| = {abs(v)} must be below 1 (units of c)")
    return math.atanh(v)


def velocity_from_rapidity(chi: Rapidity) -> float:
    """v = tanh(chi) in units of c."""
    return math.tanh(chi)


def add_velocities(v: float, w: float) -> float:
    """Relativistic composition (v + w)/(1 + v w) of collinear velocities."""
    if abs(v) >= 1.0 or abs(w) >= 1.0:
        raise SpeedLimit("velocities must be below 1 (units of c)")
    return (v + w) / (1.0 + v * w)


def boost_x(chi: Rapidity) -> LorentzMatrix:
    """Standard boost with rapidity chi along the x1 axis."""
    ch, sh = math.cosh(chi), math.sinh(chi)
    m = np.eye(4)
    m[0, 0] = m[1, 1] = ch
    m[0, 1] = m[1, 0] = -sh
    # cosh^2 - sinh^2 = 1 only up to rounding that grows with cosh^2.
    return LorentzMatrix(m, DEFAULT_TOL * max(1.0, ch * ch))


def _unit_axis(n: Iterable[float]) -> np.ndarray:
    n = np.asarray(n, dtype=float).reshape(3)
    if abs(float(n @ n) - 1.0) > 2e-12:
        raise BadAxis(f"axis must be a unit 3-vector, |n|^2 = {float(n @ n)!r}")
    return n


def rotation_about_axis(n: Iterable[float], chi_or_angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about unit axis ``n`` by the given angle."""
    n = _unit_axis(n)
    c, s = math.cos(chi_or_angle), math.sin(chi_or_angle)
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return np.eye(3) + s * k + (1.0 - c) * (k @ k)


def _frame_taking_e1_to(n: np.ndarray) -> np.ndarray:
    """A rotation with first column n, completed by Gram-Schmidt.

    Seeds e2 then e3 are tried in order, skipping a seed nearly parallel
    to n; the third column is n x (second column), so det is +1.
    """
    for seed in (np.array([0.0, 1.0, 0.0]), np.array([0.0, 0.0, 1.0])):
        u = seed - (seed @ n) * n
        norm = float(np.linalg.norm(u))
        if norm > 1e-6:
            c1 = u / norm
            return np.column_stack([n, c1, np.cross(n, c1)])
    raise BadAxis("could not complete a frame around the axis")  # pragma: no cover


def boost_axis(n: Iterable[float], chi: Rapidity) -> LorentzMatrix:
    """Boost with rapidity chi along the unit 3-vector ``n``.

    Built as R . boost_x(chi) . R^T for a deterministic rotation R taking
    e1 to n; the result depends only on n.
    """
    n = _unit_axis(n)
    r = rotation_embed(_frame_taking_e1_to(n))
    return r @ boost_x(chi) @ r.inverse()


def rotation_embed(r: np.ndarray) -> LorentzMatrix:
    """Embed a 3x3 rotation as a spatial Lorentz transformation."""
    r = np.asarray(r, dtype=float)
    if r.shape != (3, 3) or np.abs(r.T @ r - np.eye(3)).max() > 1e-9 \
            or np.linalg.det(r) < 0:
        raise ValueError("expected a 3x3 rotation matrix with det +1")
    m = np.eye(4)
    m[1:, 1:] = r
    return LorentzMatrix(m)


def parity() -> LorentzMatrix:
    """Spatial reflection diag(1, -1, -1, -1)."""
    return LorentzMatrix(np.diag([1.0, -1.0, -1.0, -1.0]))


def time_reversal() -> LorentzMatrix:
    """Time reflection diag(-1, 1, 1, 1)."""
    return LorentzMatrix(np.diag([-1.0, 1.0, 1.0, 1.0]))


def integrate_proper_acceleration(tau: np.ndarray, accel: np.ndarray) -> Rapidity:
    """Rapidity accumulated by an observer starting at rest.

    Trapezoidal integral of the sampled proper acceleration ``accel`` over
    the proper-time grid ``tau`` (both in c = 1 units, so the result is the
    dimensionless rapidity).  Step control is the caller's responsibility;
    repeated grid points are allowed and contribute nothing.
    """
    tau = np.asarray(tau, dtype=float)
    accel = np.asarray(accel, dtype=float)
    if tau.shape != accel.shape or tau.ndim != 1 or tau.size < 2:
        raise ValueError("tau and accel must be 1-d arrays of equal length >= 2")
    if not (np.all(np.isfinite(tau)) and np.all(np.isfinite(accel))):
        raise ValueError("samples must be finite")
    if np.any(np.diff(tau) < 0):
        raise ValueError("tau must be non-decreasing")
    return float(np.trapezoid(accel, tau))
