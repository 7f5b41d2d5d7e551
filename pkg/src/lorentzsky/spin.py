"""Double covers: SU(2) -> SO(3), SL(2,R) -> SO(2,1), SL(2,C) -> SO(3,1).

Each cover is the adjoint action on a trace-orthogonal matrix basis, read
off by trace pairing; all three are quadratic in the group element, so
S and -S map to the same image.  The 4d cover acts on Hermitian matrices
X = x^mu tau_mu with tau = (I, -sigma1, sigma2, sigma3); the sign on the
first Pauli matrix is what makes the induced sphere action come out as
z -> (a z + b)/(c z + d) with the same (a, b, c, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.spatial.transform import Rotation

from .decompose import standard_decompose
from .errors import BadAxis, NotHermitian, WrongComponent
from .minkowski import (ComponentLabel, FourVector, LorentzMatrix,
                        classify_component, validate_lorentz)

_DET_TOL = 1e-9
_HERMITIAN_TOL = 1e-12
_SU2_NORM_TOL = 1e-10

SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)

#: Basis of 2x2 Hermitian matrices carrying four-vector components.
TAU = np.stack([np.eye(2, dtype=complex), -SIGMA1, SIGMA2, SIGMA3])
TAU.setflags(write=False)

_PAULI = np.stack([SIGMA1, SIGMA2, SIGMA3])
_PAULI.setflags(write=False)

#: Traceless real generators for the 3d cover; tr(t_mu t_nu) = 2 eta_mu_nu.
_SL2R_GEN = np.stack([
    np.array([[0.0, 1.0], [-1.0, 0.0]]),
    np.array([[0.0, 1.0], [1.0, 0.0]]),
    np.array([[1.0, 0.0], [0.0, -1.0]]),
])
_SL2R_GEN.setflags(write=False)

_ETA3 = np.array([-1.0, 1.0, 1.0])

# Conjugating by diag(-1, 1, 1) converts between the tau spatial basis and
# the plain Pauli basis (they differ by the sign of the first axis).
_AXIS_FLIP = np.diag([-1.0, 1.0, 1.0])


@dataclass(frozen=True)
class SL2CElement:
    """Complex 2x2 matrix ((a, b), (c, d)) with unit determinant."""

    a: complex
    b: complex
    c: complex
    d: complex

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > _DET_TOL:
            raise ValueError(f"determinant {det} is not 1 within {_DET_TOL}")

    @classmethod
    def identity(cls) -> "SL2CElement":
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "SL2CElement":
        m = np.asarray(m, dtype=complex)
        return cls(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def __matmul__(self, other: "SL2CElement") -> "SL2CElement":
        return SL2CElement.from_matrix(self.matrix @ other.matrix)

    def __neg__(self) -> "SL2CElement":
        return SL2CElement(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "SL2CElement":
        return SL2CElement(self.d, -self.b, -self.c, self.a)


@dataclass(frozen=True)
class SU2Element:
    """Unitary ((alpha, beta), (-conj beta, conj alpha)) with unit norm row."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > _SU2_NORM_TOL:
            raise ValueError(f"|alpha|^2 + |beta|^2 = {norm} is not 1 within {_SU2_NORM_TOL}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.alpha, self.beta],
                         [-self.beta.conjugate(), self.alpha.conjugate()]])

    def to_sl2c(self) -> SL2CElement:
        return SL2CElement.from_matrix(self.matrix)

    def __matmul__(self, other: "SU2Element") -> "SU2Element":
        m = self.matrix @ other.matrix
        return SU2Element(m[0, 0], m[0, 1])

    def __neg__(self) -> "SU2Element":
        return SU2Element(-self.alpha, -self.beta)


@dataclass(frozen=True)
class SL2RElement:
    """Real 2x2 matrix ((a, b), (c, d)) with unit determinant."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        det = self.a * self.d - self.b * self.c
        if abs(det - 1.0) > _DET_TOL:
            raise ValueError(f"determinant {det} is not 1 within {_DET_TOL}")

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])

    def inverse_matrix(self) -> np.ndarray:
        return np.array([[self.d, -self.b], [-self.c, self.a]])

    def __matmul__(self, other: "SL2RElement") -> "SL2RElement":
        m = self.matrix @ other.matrix
        return SL2RElement(m[0, 0], m[0, 1], m[1, 0], m[1, 1])

    def __neg__(self) -> "SL2RElement":
        return SL2RElement(-self.a, -self.b, -self.c, -self.d)


@dataclass(frozen=True, eq=False)
class HermitianSlot:
    """2x2 Hermitian matrix carrying four-vector components in the tau basis.

    det X = -(interval squared) of the carried four-vector.
    """

    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        if m.shape != (2, 2):
            raise ValueError("expected a 2x2 matrix")
        residual = float(np.abs(m - m.conj().T).max())
        if residual > _HERMITIAN_TOL:
            raise NotHermitian(f"Hermiticity residual {residual:.3e} exceeds {_HERMITIAN_TOL}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def det(self) -> float:
        m = self.matrix
        return float((m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]).real)

    def four_vector(self) -> FourVector:
        return four_vector_from_hermitian(self)


def hermitian_from_four_vector(x: FourVector) -> HermitianSlot:
    """X = x^mu tau_mu = ((x0+x3, -x1-i x2), (-x1+i x2, x0-x3))."""
    return HermitianSlot(np.array([
        [x.x0 + x.x3, -x.x1 - 1j * x.x2],
        [-x.x1 + 1j * x.x2, x.x0 - x.x3],
    ]))


def four_vector_from_hermitian(x: HermitianSlot | np.ndarray) -> FourVector:
    """Inverse of :func:`hermitian_from_four_vector` (exact on its image)."""
    if not isinstance(x, HermitianSlot):
        x = HermitianSlot(np.asarray(x))
    m = x.matrix
    return FourVector(
        0.5 * (m[0, 0].real + m[1, 1].real),
        -m[0, 1].real,
        -m[0, 1].imag,
        0.5 * (m[0, 0].real - m[1, 1].real),
    )


def sl2c_to_lorentz(s: SL2CElement) -> LorentzMatrix:
    """Image of s under the 2-to-1 cover of the proper orthochronous group.

    Column mu holds the tau-basis components of s tau_mu s-dagger; entries
    are quadratic in (a, b, c, d), so s and -s give the same matrix.
    """
    m = s.matrix
    conj = np.einsum("ab,mbc,dc->mad", m, TAU, m.conj())
    out = 0.5 * np.einsum("nab,mba->nm", TAU, conj).real
    # residual of the quadratic map grows with the squared output scale
    scale = float(np.abs(out).max())
    return validate_lorentz(out, tol=1e-9 * max(1.0, scale * scale))


def su2_to_so3(u: SU2Element) -> np.ndarray:
    """3x3 rotation from the adjoint action on the Pauli basis."""
    m = u.matrix
    conj = np.einsum("ab,jbc,dc->jad", m, _PAULI, m.conj())
    return 0.5 * np.einsum("iab,jba->ij", _PAULI, conj).real


def sl2r_to_so21(s: SL2RElement) -> np.ndarray:
    """3x3 Lorentz matrix (signature -,+,+) from the adjoint action.

    The image preserves diag(-1, 1, 1) and has top-left entry >= 1.
    """
    m = s.matrix
    inv = s.inverse_matrix()
    conj = np.einsum("ab,mbc,cd->mad", m, _SL2R_GEN, inv)
    traces = 0.5 * np.einsum("nab,mba->nm", _SL2R_GEN, conj)
    return _ETA3[:, None] * traces


def su2_from_axis_angle(n: Iterable[float], phi: float) -> SU2Element:
    """cos(phi/2) I - i sin(phi/2) (n . sigma); covers the rotation R(n, phi)."""
    n = np.asarray(n, dtype=float).reshape(3)
    if abs(float(n @ n) - 1.0) > 2e-12:
        raise BadAxis(f"axis must be a unit 3-vector, |n|^2 = {float(n @ n)!r}")
    half = 0.5 * phi
    c, s = math.cos(half), math.sin(half)
    return SU2Element(complex(c, -n[2] * s), complex(-n[1] * s, -n[0] * s))


def _su2_covering_spatial_rotation(r: np.ndarray) -> np.ndarray:
    """2x2 unitary U with sl2c_to_lorentz(U) embedding the rotation r.

    The tau spatial basis differs from the Pauli basis by the sign of the
    first axis, so the required U is the Pauli-basis cover of the
    axis-flipped conjugate of r; its unit quaternion supplies U directly.
    """
    q = Rotation.from_matrix(_AXIS_FLIP @ r @ _AXIS_FLIP).as_quat()  # x, y, z, w
    return q[3] * np.eye(2, dtype=complex) - 1j * (
        q[0] * SIGMA1 + q[1] * SIGMA2 + q[2] * SIGMA3)


def _canonical_sign(s: SL2CElement) -> SL2CElement:
    """Pick the representative of {s, -s} whose first significant entry has
    positive real part, breaking near-imaginary ties by positive imaginary part."""
    entries = (s.a, s.b, s.c, s.d)
    scale = max(abs(e) for e in entries)
    for e in entries:
        if abs(e) <= 1e-12 * scale:
            continue
        if abs(e.real) > 1e-12 * abs(e):
            return s if e.real > 0 else -s
        return s if e.imag > 0 else -s
    return s  # pragma: no cover


def lift_lorentz_to_sl2c(lam: LorentzMatrix) -> SL2CElement:
    """One of the two preimages of a proper orthochronous matrix under the cover.

    Factors the input as rotation . standard boost . rotation, lifts each
    factor, and multiplies.  The sign of the result is canonicalized; the
    other preimage is its negative.
    """
    if classify_component(lam) is not ComponentLabel.PROPER_ORTHOCHRONOUS:
        raise WrongComponent("only proper orthochronous matrices have a spinor lift")
    dec = standard_decompose(lam)
    half = 0.5 * dec.chi
    boost = np.array([[math.cosh(half), math.sinh(half)],
                      [math.sinh(half), math.cosh(half)]], dtype=complex)
    m = (_su2_covering_spatial_rotation(dec.r1) @ boost
         @ _su2_covering_spatial_rotation(dec.r2))
    return _canonical_sign(SL2CElement.from_matrix(m))
