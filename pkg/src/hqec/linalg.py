"""Quaternion-amplitude linear algebra.

Vectors and matrices store their entries as ``(..., 4)`` float arrays in
``(w, x, y, z)`` component order.  Because quaternion multiplication is
non-commutative, a matrix entry can multiply an amplitude from the left
or from the right; :class:`MulSide` makes that choice explicit and
:func:`matvec` implements both conventions.

The inner product is right-linear: ``<phi|psi * q> == <phi|psi> * q``.
Norms are real, taken from the scalar part of ``<psi|psi>``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .quaternion import TOLERANCE, Quaternion

_CONJ_SIGNS = np.array([1.0, -1.0, -1.0, -1.0])


def qmul_components(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasted Hamilton product of ``(..., 4)`` component arrays."""
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    return np.stack(
        (
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ),
        axis=-1,
    )


def qconj_components(a: np.ndarray) -> np.ndarray:
    return a * _CONJ_SIGNS


def left_mul_matrix(q: Quaternion) -> np.ndarray:
    """4x4 real matrix L with ``L @ v == components of q * v``."""
    w, x, y, z = q.w, q.x, q.y, q.z
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ]
    )


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=float)
    arr.flags.writeable = False
    return arr


def _validate_components(arr: np.ndarray, expected_ndim: int) -> np.ndarray:
    arr = np.asarray(arr, dtype=float)
    if arr.ndim != expected_ndim or arr.shape[-1] != 4:
        raise ValueError(f"expected shape (..., 4) with ndim {expected_ndim}, got {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("components must be finite")
    return arr


class QVector:
    """Dense quaternion-amplitude vector."""

    __slots__ = ("_c",)

    def __init__(self, amps: Iterable[Quaternion]):
        rows = [q.as_tuple() for q in amps]
        if not rows:
            raise ValueError("vector must have at least one amplitude")
        self._c = _freeze(np.array(rows))

    @classmethod
    def from_components(cls, arr: np.ndarray) -> "QVector":
        arr = _validate_components(arr, 2)
        if arr.shape[0] < 1:
            raise ValueError("vector must have at least one amplitude")
        return cls._wrap(arr.copy())

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "QVector":
        v = object.__new__(cls)
        v._c = _freeze(arr)
        return v

    @classmethod
    def basis(cls, dim: int, index: int) -> "QVector":
        if not 0 <= index < dim:
            raise ValueError(f"basis index {index} out of range for dim {dim}")
        arr = np.zeros((dim, 4))
        arr[index, 0] = 1.0
        return cls._wrap(arr)

    @classmethod
    def zeros(cls, dim: int) -> "QVector":
        if dim < 1:
            raise ValueError("dim must be >= 1")
        return cls._wrap(np.zeros((dim, 4)))

    @property
    def dim(self) -> int:
        return self._c.shape[0]

    @property
    def components(self) -> np.ndarray:
        """Read-only ``(dim, 4)`` component array."""
        return self._c

    def __len__(self) -> int:
        return self.dim

    def __getitem__(self, index: int) -> Quaternion:
        w, x, y, z = self._c[index]
        return Quaternion(w, x, y, z)

    def __iter__(self):
        for row in self._c:
            yield Quaternion(*row)

    def isclose(self, other: "QVector", tol: float = TOLERANCE) -> bool:
        return self.dim == other.dim and bool(np.all(np.abs(self._c - other._c) <= tol))

    def __repr__(self) -> str:
        return f"QVector(dim={self.dim})"


class QMatrix:
    """Dense quaternion-entry matrix, row-major."""

    __slots__ = ("_c",)

    def __init__(self, rows: Sequence[Sequence[Quaternion]]):
        data = [[q.as_tuple() for q in row] for row in rows]
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        if any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        self._c = _freeze(np.array(data))

    @classmethod
    def from_components(cls, arr: np.ndarray) -> "QMatrix":
        arr = _validate_components(arr, 3)
        return cls._wrap(arr.copy())

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "QMatrix":
        m = object.__new__(cls)
        m._c = _freeze(arr)
        return m

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        arr = np.zeros((n, n, 4))
        arr[np.arange(n), np.arange(n), 0] = 1.0
        return cls._wrap(arr)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls._wrap(np.zeros((rows, cols, 4)))

    @property
    def rows(self) -> int:
        return self._c.shape[0]

    @property
    def cols(self) -> int:
        return self._c.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def components(self) -> np.ndarray:
        """Read-only ``(rows, cols, 4)`` component array."""
        return self._c

    def entry(self, r: int, c: int) -> Quaternion:
        w, x, y, z = self._c[r, c]
        return Quaternion(w, x, y, z)

    def isclose(self, other: "QMatrix", tol: float = TOLERANCE) -> bool:
        return self.shape == other.shape and bool(np.all(np.abs(self._c - other._c) <= tol))

    def __repr__(self) -> str:
        return f"QMatrix(shape={self.shape})"


class MulSide(enum.Enum):
    """Which side a matrix entry multiplies an amplitude on."""

    LEFT = "left"
    RIGHT = "right"


def inner_product(phi: QVector, psi: QVector) -> Quaternion:
    """Quaternion-valued inner product ``sum_n conj(phi_n) * psi_n``.

    Conjugate-symmetric: ``inner_product(phi, psi) == conj(inner_product(psi, phi))``.
    """
    if phi.dim != psi.dim:
        raise ValueError(f"dimension mismatch: {phi.dim} vs {psi.dim}")
    total = qmul_components(qconj_components(phi.components), psi.components).sum(axis=0)
    return Quaternion(*total)


def real_norm_sq(psi: QVector) -> float:
    """Real squared norm: the scalar part of ``<psi|psi>``, i.e. the component sum of squares."""
    return float(np.sum(psi.components * psi.components))


def right_scalar_mul(psi: QVector, q: Quaternion) -> QVector:
    """Scale every amplitude on the right: ``psi_n -> psi_n * q``."""
    qc = np.array(q.as_tuple())
    return QVector._wrap(qmul_components(psi.components, qc))


def adjoint(a: QMatrix) -> QMatrix:
    """Conjugate transpose: entry ``(r, c)`` becomes ``conj(entry(c, r))``."""
    return QMatrix._wrap(qconj_components(np.swapaxes(a.components, 0, 1)))


def matvec(a: QMatrix, psi: QVector, side: MulSide) -> QVector:
    """Apply a matrix to a vector with an explicit entry-multiplication side.

    LEFT:  ``out_r = sum_c entry(r, c) * psi_c``
    RIGHT: ``out_r = sum_c psi_c * entry(r, c)``
    """
    if a.cols != psi.dim:
        raise ValueError(f"shape mismatch: matrix cols {a.cols} vs vector dim {psi.dim}")
    v = psi.components[None, :, :]
    if side is MulSide.LEFT:
        prod = qmul_components(a.components, v)
    elif side is MulSide.RIGHT:
        prod = qmul_components(v, a.components)
    else:
        raise ValueError(f"side must be a MulSide, got {side!r}")
    return QVector._wrap(prod.sum(axis=1))


def matmul(a: QMatrix, b: QMatrix) -> QMatrix:
    """Matrix product with entrywise left-to-right quaternion multiplication."""
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    prod = qmul_components(a.components[:, :, None, :], b.components[None, :, :, :])
    return QMatrix._wrap(prod.sum(axis=1))


def tensor(a: QMatrix, b: QMatrix) -> QMatrix:
    """Kronecker product with quaternion entries, A-index major."""
    prod = qmul_components(
        a.components[:, None, :, None, :], b.components[None, :, None, :, :]
    )
    return QMatrix._wrap(prod.reshape(a.rows * b.rows, a.cols * b.cols, 4))


@dataclass(frozen=True)
class UnitarityReport:
    """Result of checking ``U @ adjoint(U) == I`` entrywise."""

    passed: bool
    max_deviation: float
    worst_entry: tuple[int, int]
    tol: float


def is_unitary(u: QMatrix, tol: float = TOLERANCE) -> UnitarityReport:
    """Check ``U * U+ == I`` (left entry-multiplication throughout).

    The report carries the largest entrywise quaternion-norm deviation
    from the identity and the offending entry index.
    """
    if u.rows != u.cols:
        raise ValueError(f"unitarity check needs a square matrix, got {u.shape}")
    m = matmul(u, adjoint(u))
    delta = m.components - QMatrix.identity(u.rows).components
    norms = np.sqrt(np.sum(delta * delta, axis=-1))
    worst_flat = int(np.argmax(norms))
    worst = (worst_flat // u.cols, worst_flat % u.cols)
    max_dev = float(norms[worst])
    return UnitarityReport(passed=max_dev <= tol, max_deviation=max_dev, worst_entry=worst, tol=tol)


def phase_alignment_check(u: QMatrix, tol: float = TOLERANCE) -> bool:
    """True iff every entry commutes with ``i``, i.e. has no j or k component."""
    if u.rows != u.cols:
        raise ValueError(f"phase alignment check needs a square matrix, got {u.shape}")
    return bool(np.max(np.abs(u.components[..., 2:4]), initial=0.0) <= tol)


def _frobenius(arr: np.ndarray) -> float:
    return math.sqrt(float(np.sum(arr * arr)))


def matrix_exp(a: QMatrix, terms: int) -> tuple[QMatrix, float]:
    """Truncated exponential series ``sum_{m=0}^{terms} A**m / m!``.

    Returns the partial sum together with an upper-bound estimate of the
    dropped tail (geometric bound in the Frobenius norm; ``inf`` when the
    bound does not contract).  Powers use left-to-right multiplication.
    """
    if a.rows != a.cols:
        raise ValueError(f"matrix exponential needs a square matrix, got {a.shape}")
    if terms < 1:
        raise ValueError("terms must be >= 1")
    acc = QMatrix.identity(a.rows).components.copy()
    term = QMatrix.identity(a.rows)
    for m in range(1, terms + 1):
        term = QMatrix._wrap(matmul(term, a).components / m)
        acc += term.components
    ratio = _frobenius(a.components) / (terms + 1)
    if ratio < 1.0:
        residual = _frobenius(term.components) * ratio / (1.0 - ratio)
    else:
        residual = math.inf
    return QMatrix._wrap(acc), residual


# -- JSON-friendly serialization ----------------------------------------

def matrix_to_dict(a: QMatrix) -> dict:
    """``{"rows": r, "cols": c, "entries": [[w, x, y, z], ...]}`` row-major."""
    return {
        "rows": a.rows,
        "cols": a.cols,
        "entries": [[float(v) for v in entry] for entry in a.components.reshape(-1, 4)],
    }


def matrix_from_dict(data: dict) -> QMatrix:
    required = {"rows", "cols", "entries"}
    if set(data) != required:
        unexpected = set(data) - required
        missing = required - set(data)
        problem = unexpected or missing
        raise ValueError(f"bad matrix dict keys: {sorted(problem)}")
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = np.asarray(data["entries"], dtype=float)
    if entries.shape != (rows * cols, 4):
        raise ValueError(f"expected {rows * cols} entries of 4 components, got {entries.shape}")
    return QMatrix.from_components(entries.reshape(rows, cols, 4))


def vector_to_dict(v: QVector) -> dict:
    """Vectors serialize as single-column matrices."""
    return {
        "rows": v.dim,
        "cols": 1,
        "entries": [[float(c) for c in amp] for amp in v.components],
    }


def vector_from_dict(data: dict) -> QVector:
    m = matrix_from_dict(data)
    if m.cols != 1:
        raise ValueError(f"expected a single-column matrix for a vector, got cols={m.cols}")
    return QVector.from_components(m.components[:, 0, :])
