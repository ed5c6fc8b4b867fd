"""n-qubit quaternion-amplitude state vectors and the gate set.

Basis ordering is big-endian: qubit 1 is the leftmost label, so for two
qubits the amplitudes are ordered ``|00>, |01>, |10>, |11>``.  Qubit
indices in the public API are 1-based to match that labelling.

Each gate carries the side on which its matrix entries multiply the
amplitudes.  The quaternionic Hadamard applies on the LEFT and the
quaternionic CNOT on the RIGHT; the two conventions are genuinely
different because the entries do not commute with the amplitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import quaternion as quat
from .quaternion import ImaginaryAxis, Quaternion, exp_axis, format_quaternion
from .linalg import (
    MulSide,
    QMatrix,
    QVector,
    left_mul_matrix,
    matvec,
    real_norm_sq,
)

#: Unit phase paired with each Pauli letter (identity, bit flip, combined
#: flip, phase flip -> 1, i, j, k).
UNIT_FOR_LETTER = {"I": quat.ONE, "X": quat.I, "Y": quat.J, "Z": quat.K}

NORMALIZATION_TOL = 1e-10


def bit_of(index: int, qubit: int, n: int) -> int:
    """Bit of ``qubit`` (1-based, leftmost first) in basis index ``index``."""
    return (index >> (n - qubit)) & 1


class QRegister:
    """Immutable register of ``n`` qubits with quaternion amplitudes."""

    __slots__ = ("_n", "_amps")

    def __init__(self, n: int, amps: QVector):
        if n < 1:
            raise ValueError("register needs at least one qubit")
        if amps.dim != 2**n:
            raise ValueError(f"expected {2**n} amplitudes for {n} qubits, got {amps.dim}")
        self._n = n
        self._amps = amps

    @classmethod
    def computational(cls, n: int, bits: str | int) -> "QRegister":
        """Basis state, e.g. ``computational(2, "10")`` or ``computational(2, 2)``."""
        if isinstance(bits, str):
            if len(bits) != n or any(b not in "01" for b in bits):
                raise ValueError(f"bad bit string {bits!r} for {n} qubits")
            index = int(bits, 2)
        else:
            index = int(bits)
        return cls(n, QVector.basis(2**n, index))

    @classmethod
    def from_components(cls, n: int, arr: np.ndarray) -> "QRegister":
        return cls(n, QVector.from_components(arr))

    @classmethod
    def encode_across_units(
        cls, alpha: float, beta: float, gamma: float, delta: float
    ) -> "QRegister":
        """Two-qubit state ``alpha|00> + beta*i|01> + gamma*j|10> + delta*k|11>``.

        The four real coefficients ride on distinct quaternion units, so a
        disturbance of any one of them shows up in the corresponding
        component strength.  Requires ``alpha**2 + ... + delta**2 == 1``.
        """
        total = alpha * alpha + beta * beta + gamma * gamma + delta * delta
        if abs(total - 1.0) > NORMALIZATION_TOL:
            raise ValueError(f"coefficients must have unit square sum, got {total}")
        arr = np.zeros((4, 4))
        arr[0, 0] = alpha
        arr[1, 1] = beta
        arr[2, 2] = gamma
        arr[3, 3] = delta
        return cls(2, QVector.from_components(arr))

    @property
    def n(self) -> int:
        return self._n

    @property
    def dim(self) -> int:
        return 2**self._n

    @property
    def amps(self) -> QVector:
        return self._amps

    def amplitude(self, bits: str) -> Quaternion:
        if len(bits) != self._n or any(b not in "01" for b in bits):
            raise ValueError(f"bad bit string {bits!r}")
        return self._amps[int(bits, 2)]

    def is_normalized(self, tol: float = NORMALIZATION_TOL) -> bool:
        return abs(real_norm_sq(self._amps) - 1.0) <= tol

    def isclose(self, other: "QRegister", tol: float = quat.TOLERANCE) -> bool:
        return self._n == other._n and self._amps.isclose(other._amps, tol)

    def nonzero_terms(self, tol: float = quat.TOLERANCE) -> list[tuple[str, Quaternion]]:
        terms = []
        for index, amp in enumerate(self._amps):
            if amp.norm_sq() > tol:
                terms.append((format(index, f"0{self._n}b"), amp))
        return terms

    def render(self, digits: int = 12) -> str:
        """Text like ``(0.707...+0i+0j+0k)|00> + (0-0i-0.707...j+0k)|11>``."""
        terms = [
            f"({format_quaternion(amp, digits)})|{bits}>"
            for bits, amp in self.nonzero_terms()
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"QRegister(n={self._n})"


@dataclass(frozen=True)
class Gate:
    """Named gate matrix with its entry-multiplication side."""

    name: str
    matrix: QMatrix
    side: MulSide
    arity: int

    def __post_init__(self) -> None:
        dim = 2**self.arity
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"gate {self.name}: arity {self.arity} needs a {dim}x{dim} matrix, "
                f"got {self.matrix.shape}"
            )


_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def hadamard_gate() -> Gate:
    """Quaternionic Hadamard ``(1/sqrt2) [[1, i], [i, -1]]``, applied on the LEFT.

    As printed this matrix is not unitary; :func:`gate_audit` surfaces the
    failure rather than substituting a corrected matrix.
    """
    m = QMatrix(
        [
            [_INV_SQRT2 * quat.ONE, _INV_SQRT2 * quat.I],
            [_INV_SQRT2 * quat.I, -_INV_SQRT2 * quat.ONE],
        ]
    )
    return Gate("H", m, MulSide.LEFT, 1)


def cnot_gate() -> Gate:
    """Quaternionic CNOT with unit entries ``1, i, j, k``, applied on the RIGHT."""
    z = quat.ZERO
    m = QMatrix(
        [
            [quat.ONE, z, z, z],
            [z, quat.I, z, z],
            [z, z, z, quat.J],
            [z, z, quat.K, z],
        ]
    )
    return Gate("CNOT", m, MulSide.RIGHT, 2)


def t_gate() -> Gate:
    """Non-Clifford phase gate ``diag(1, cos(pi/4) + i sin(pi/4))``."""
    m = QMatrix([[quat.ONE, quat.ZERO], [quat.ZERO, exp_axis(quat.I_AXIS, math.pi / 4)]])
    return Gate("T", m, MulSide.LEFT, 1)


_PAULI_ROWS = {
    "I": [[quat.ONE, quat.ZERO], [quat.ZERO, quat.ONE]],
    "X": [[quat.ZERO, quat.ONE], [quat.ONE, quat.ZERO]],
    "Y": [[quat.ZERO, -quat.I], [quat.I, quat.ZERO]],
    "Z": [[quat.ONE, quat.ZERO], [quat.ZERO, -quat.ONE]],
}


def pauli_gate(letter: str) -> Gate:
    if letter not in _PAULI_ROWS:
        raise ValueError(f"letter must be one of I, X, Y, Z, got {letter!r}")
    return Gate(letter, QMatrix(_PAULI_ROWS[letter]), MulSide.LEFT, 1)


def phased_pauli_gate(letter: str) -> Gate:
    """Pauli letter premultiplied by its paired unit: ``iX``, ``jY``, ``kZ``, ``I``."""
    if letter not in _PAULI_ROWS:
        raise ValueError(f"letter must be one of I, X, Y, Z, got {letter!r}")
    unit = UNIT_FOR_LETTER[letter]
    rows = [[unit * entry for entry in row] for row in _PAULI_ROWS[letter]]
    name = letter if letter == "I" else f"{quat.phase_label(unit)[1]}{letter}"
    return Gate(name, QMatrix(rows), MulSide.LEFT, 1)


def identity_gate() -> Gate:
    return pauli_gate("I")


def _embed(gate: Gate, targets: tuple[int, ...], n: int) -> QMatrix:
    """Expand a gate matrix to the full register via identity padding."""
    dim = 2**n
    shifts = tuple(n - q for q in targets)
    rest_mask = (dim - 1) ^ sum(1 << s for s in shifts)
    sub = gate.matrix.components
    full = np.zeros((dim, dim, 4))
    for r in range(dim):
        sr = 0
        for s in shifts:
            sr = (sr << 1) | ((r >> s) & 1)
        base = r & rest_mask
        for sc in range(sub.shape[1]):
            c = base
            for pos, s in enumerate(shifts):
                c |= ((sc >> (len(shifts) - 1 - pos)) & 1) << s
            full[r, c] = sub[sr, sc]
    return QMatrix.from_components(full)


def apply_gate(reg: QRegister, gate: Gate, targets: list[int] | tuple[int, ...]) -> QRegister:
    """Apply ``gate`` to 1-based ``targets`` using the gate's multiplication side."""
    targets = tuple(targets)
    if len(targets) != gate.arity:
        raise ValueError(f"gate {gate.name} has arity {gate.arity}, got {len(targets)} targets")
    if len(set(targets)) != len(targets):
        raise ValueError("targets must be distinct")
    for q in targets:
        if not 1 <= q <= reg.n:
            raise ValueError(f"target {q} out of range 1..{reg.n}")
    if gate.arity == reg.n and targets == tuple(range(1, reg.n + 1)):
        full = gate.matrix
    else:
        full = _embed(gate, targets, reg.n)
    return QRegister(reg.n, matvec(full, reg.amps, gate.side))


def bell_prepare() -> QRegister:
    """Two-qubit benchmark circuit: Hadamard (LEFT) then CNOT (RIGHT) on ``|00>``.

    Produces amplitudes ``1/sqrt2`` on ``|00>`` and ``-j/sqrt2`` on ``|11>``.
    """
    reg = QRegister.computational(2, "00")
    reg = apply_gate(reg, hadamard_gate(), [1])
    return apply_gate(reg, cnot_gate(), [1, 2])


def substitute_units(gate: Gate, mapping: dict[str, Quaternion]) -> Gate:
    """Re-express each entry's ``i``/``j``/``k`` coefficients under a substitution.

    An entry ``w + x*i + y*j + z*k`` becomes
    ``w + x*map(i) + y*map(j) + z*map(k)``; unmapped units stay themselves.
    Substitution targets must be unit quaternions.
    """
    units = {"i": quat.I, "j": quat.J, "k": quat.K}
    for key, value in mapping.items():
        if key not in units:
            raise ValueError(f"substitution key must be one of i, j, k, got {key!r}")
        if not value.is_unit():
            raise ValueError(f"substitution target for {key} is not a unit quaternion: {value}")
    table = {key: mapping.get(key, unit) for key, unit in units.items()}
    comp = gate.matrix.components
    out = np.zeros_like(comp)
    out[..., 0] = comp[..., 0]
    for idx, key in ((1, "i"), (2, "j"), (3, "k")):
        target = np.array(table[key].as_tuple())
        out += comp[..., idx : idx + 1] * target
    name = gate.name if not mapping else gate.name + "*"
    return Gate(name, QMatrix.from_components(out), gate.side, gate.arity)


@dataclass(frozen=True)
class MeasurementOutcome:
    """Sampled computational-basis measurement of one qubit."""

    bit: int
    probability: float
    post_state: QRegister


def measure_qubit(reg: QRegister, qubit: int, rng_seed: int) -> MeasurementOutcome:
    """Measure one qubit; probabilities come from real amplitude norms.

    ``P(b)`` sums ``norm_sq`` of every amplitude whose basis state has bit
    ``b`` at ``qubit``; the post state is the surviving block rescaled by
    the real factor ``1/sqrt(P)``.  Sampling is driven entirely by
    ``rng_seed``.
    """
    if not 1 <= qubit <= reg.n:
        raise ValueError(f"qubit {qubit} out of range 1..{reg.n}")
    comp = reg.amps.components
    weights = np.sum(comp * comp, axis=1)
    total = float(weights.sum())
    if total <= 0.0:
        raise ValueError("cannot measure a zero-norm register")
    bits = (np.arange(reg.dim) >> (reg.n - qubit)) & 1
    p0 = float(weights[bits == 0].sum()) / total
    rng = np.random.default_rng(rng_seed)
    outcome = 0 if rng.random() < p0 else 1
    prob = p0 if outcome == 0 else 1.0 - p0
    post = comp.copy()
    post[bits != outcome] = 0.0
    post /= math.sqrt(prob * total)
    return MeasurementOutcome(outcome, prob, QRegister.from_components(reg.n, post))


_AXIS_COLUMN = {"i": 1, "j": 2, "k": 3}


def component_strength(reg: QRegister, qubit: int, axis: str) -> float:
    """Summed squared ``axis`` components over the whole register.

    The per-qubit argument is bookkeeping only: no per-qubit partial trace
    is attempted, so the sum runs over every amplitude.  For a single
    qubit whose amplitude has j component ``c`` this returns ``c**2``.
    """
    if not 1 <= qubit <= reg.n:
        raise ValueError(f"qubit {qubit} out of range 1..{reg.n}")
    if axis not in _AXIS_COLUMN:
        raise ValueError(f"axis must be one of i, j, k, got {axis!r}")
    col = reg.amps.components[:, _AXIS_COLUMN[axis]]
    return float(np.sum(col * col))


def conditional_flip(reg: QRegister, control: int, target: int) -> QRegister:
    """Deterministic non-linear conditional flip.

    Sums the real parts of the amplitudes in the control qubit's ``|1>``
    block; when that overlap is nonzero (beyond the library tolerance) an
    X is applied to the target, otherwise the state is returned unchanged.
    Not a linear map, so it is never reported as a unitary gate.
    """
    if control == target:
        raise ValueError("control and target must be distinct")
    for q in (control, target):
        if not 1 <= q <= reg.n:
            raise ValueError(f"qubit {q} out of range 1..{reg.n}")
    comp = reg.amps.components
    indices = np.arange(reg.dim)
    control_one = ((indices >> (reg.n - control)) & 1) == 1
    overlap = float(comp[control_one, 0].sum())
    if abs(overlap) <= quat.TOLERANCE:
        return reg
    flipped = comp[indices ^ (1 << (reg.n - target))]
    return QRegister.from_components(reg.n, flipped)


def left_scalar_mul(reg: QRegister, q: Quaternion) -> QRegister:
    """Multiply every amplitude by ``q`` on the left."""
    rotated = reg.amps.components @ left_mul_matrix(q).T
    return QRegister.from_components(reg.n, rotated)
