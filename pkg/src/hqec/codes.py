"""Pauli strings with unit-quaternion phases, stabilizer codes, and audits.

Three codes ship:

* ``three``    -- the 3-qubit bit-flip construction (generators ZZI, IZZ).
* ``paper5``   -- a published five-qubit variant with generators
  XXXXI, ZZIII, IZZII, IIZZZ and claimed codewords |00000>, |11111>.
* ``perfect5`` -- the textbook [[5,1,3]] code (cyclic XZZXI family).

Syndromes are commutation-based: bit ``i`` is +1 when the error commutes
with generator ``i`` and -1 when it anticommutes.  The ``paper5`` code's
published syndrome table disagrees with that rule (and its generators do
not fix the claimed codewords); :func:`audit_against_paper` and
:func:`verify_codewords` report those discrepancies instead of repairing
them.  The published rows are reference data only, never decoder truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import quaternion as quat
from .quaternion import Quaternion, phase_label
from .linalg import QVector, inner_product, left_mul_matrix
from .register import UNIT_FOR_LETTER, QRegister

LETTERS = ("I", "X", "Y", "Z")
_ERROR_LETTERS = ("X", "Y", "Z")


@dataclass(frozen=True)
class PauliString:
    """Per-qubit I/X/Y/Z word carrying one unit-quaternion phase.

    The phase multiplies the whole operator from the left and must be one
    of the eight units ``+-1, +-i, +-j, +-k``.
    """

    letters: tuple[str, ...]
    phase: Quaternion = quat.ONE

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))
        if not self.letters:
            raise ValueError("empty Pauli string")
        for letter in self.letters:
            if letter not in LETTERS:
                raise ValueError(f"bad Pauli letter {letter!r}")
        if self.phase not in quat.UNIT_PHASES:
            raise ValueError(f"phase must be one of the eight unit phases, got {self.phase}")

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(("I",) * n)

    @classmethod
    def single(cls, n: int, qubit: int, letter: str, phase: Quaternion = quat.ONE) -> "PauliString":
        if not 1 <= qubit <= n:
            raise ValueError(f"qubit {qubit} out of range 1..{n}")
        letters = tuple(letter if q == qubit else "I" for q in range(1, n + 1))
        return cls(letters, phase)

    @classmethod
    def from_word(cls, word: str, phase: Quaternion = quat.ONE) -> "PauliString":
        return cls(tuple(word), phase)

    @property
    def n(self) -> int:
        return len(self.letters)

    @property
    def weight(self) -> int:
        return sum(1 for letter in self.letters if letter != "I")

    def word(self) -> str:
        return "".join(self.letters)

    @property
    def label(self) -> str:
        """Compact text: ``X1`` for a plain single, ``iX1`` when phased, else the word."""
        supports = [(q, letter) for q, letter in enumerate(self.letters, start=1) if letter != "I"]
        prefix = "" if self.phase == quat.ONE else phase_label(self.phase).lstrip("+")
        if len(supports) == 1:
            q, letter = supports[0]
            return f"{prefix}{letter}{q}"
        if not supports:
            return f"{prefix}I" if prefix else "I"
        return f"{prefix}{self.word()}"


def commute_sign(a: PauliString, b: PauliString) -> int:
    """+1 when the strings commute, -1 when they anticommute.

    Two letters contribute an anticommutation exactly when they differ and
    neither is I; the overall sign is the parity of those positions.
    Phases never matter: unit scalars cannot flip a commutator sign.
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    return _commute_letters(a.letters, b.letters)


def _commute_letters(a: tuple[str, ...], b: tuple[str, ...]) -> int:
    clashes = 0
    for la, lb in zip(a, b):
        if la != lb and la != "I" and lb != "I":
            clashes += 1
    return -1 if clashes & 1 else 1


@dataclass(frozen=True)
class Syndrome:
    """Ordered +-1 outcomes, one per stabilizer generator."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))
        for bit in self.bits:
            if bit not in (-1, 1):
                raise ValueError(f"syndrome bits must be +1 or -1, got {bit}")

    @property
    def trivial(self) -> bool:
        return all(bit == 1 for bit in self.bits)

    def __str__(self) -> str:
        return "(" + ",".join(f"{b:+d}" for b in self.bits) + ")"


@dataclass(frozen=True, eq=False)
class StabilizerCode:
    """Stabilizer code with explicit codeword states.

    Generator pairs must commute; that is checked at construction.  The
    declared distance ``d`` fixes the claimed correction radius
    ``t = (d - 1) // 2`` but is not re-derived from the generators, so a
    code whose published parameters overstate its behavior still builds
    (the audits are where the mismatch shows up).
    """

    code_id: str
    n: int
    k: int
    d: int
    generators: tuple[PauliString, ...]
    logical_x: PauliString
    logical_z: PauliString
    codeword_zero: QRegister
    codeword_one: QRegister
    _decode_map: dict = field(init=False, repr=False)

    def __post_init__(self) -> None:
        for ps in (*self.generators, self.logical_x, self.logical_z):
            if ps.n != self.n:
                raise ValueError(f"operator length {ps.n} does not match n={self.n}")
        for cw in (self.codeword_zero, self.codeword_one):
            if cw.n != self.n:
                raise ValueError("codeword register size does not match n")
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1 :]:
                if commute_sign(a, b) != 1:
                    raise ValueError(
                        f"generators {a.word()} and {b.word()} anticommute"
                    )
        object.__setattr__(self, "_decode_map", _build_decode_map(self))

    @property
    def t(self) -> int:
        """Correctable error count ``(d - 1) // 2`` for the declared distance."""
        return (self.d - 1) // 2


def syndrome_of(e: PauliString, code: StabilizerCode) -> Syndrome:
    """Commutation syndrome of ``e`` against the code's generators.

    The phase of ``e`` never affects the outcome, so a phased error such
    as ``iX1`` shares the syndrome of ``X1``.
    """
    if e.n != code.n:
        raise ValueError(f"error length {e.n} does not match code n={code.n}")
    return Syndrome(tuple(commute_sign(e, g) for g in code.generators))


def _enumerate_single_errors(code: StabilizerCode):
    yield PauliString.identity(code.n)
    for qubit in range(1, code.n + 1):
        for letter in _ERROR_LETTERS:
            yield PauliString.single(code.n, qubit, letter)


def _build_decode_map(code: StabilizerCode) -> dict[tuple[int, ...], list[PauliString]]:
    # Enumeration order doubles as the decoder tie-break:
    # weight, then qubit index, then X < Y < Z.
    table: dict[tuple[int, ...], list[PauliString]] = {}
    for error in _enumerate_single_errors(code):
        bits = tuple(_commute_letters(error.letters, g.letters) for g in code.generators)
        table.setdefault(bits, []).append(error)
    return table


@dataclass(frozen=True)
class DecodeOutcome:
    """Chosen correction plus collision metadata.

    ``correction`` is ``None`` exactly when the syndrome matches no
    enumerated single-qubit error (``unknown``), which is distinct from
    the identity correction returned for the trivial syndrome.
    """

    correction: PauliString | None
    unknown: bool
    ambiguous: bool
    candidates: tuple[PauliString, ...]


def decode(syndrome: Syndrome, code: StabilizerCode) -> DecodeOutcome:
    """Minimum-weight single-qubit correction for a syndrome.

    Ties are broken by weight, then lowest qubit index, then letter order
    X < Y < Z; every co-matching error is reported in ``candidates``.
    """
    if len(syndrome.bits) != len(code.generators):
        raise ValueError(
            f"syndrome length {len(syndrome.bits)} does not match "
            f"{len(code.generators)} generators"
        )
    candidates = code._decode_map.get(syndrome.bits)
    if candidates is None:
        return DecodeOutcome(None, unknown=True, ambiguous=False, candidates=())
    return DecodeOutcome(
        candidates[0],
        unknown=False,
        ambiguous=len(candidates) > 1,
        candidates=tuple(candidates),
    )


# -- state-level application and measurement ----------------------------

def apply_pauli(ps: PauliString, reg: QRegister) -> QRegister:
    """Apply a phased Pauli string to a register (phase as a left scalar).

    Per qubit, X permutes the basis, Z contributes ``(-1)**bit`` and Y
    acts as ``i * X * Z``; the accumulated unit scalar multiplies every
    amplitude from the left.
    """
    if ps.n != reg.n:
        raise ValueError(f"operator length {ps.n} does not match register n={reg.n}")
    n, dim = reg.n, reg.dim
    x_mask = z_mask = 0
    n_y = 0
    for qubit, letter in enumerate(ps.letters, start=1):
        shift = n - qubit
        if letter in ("X", "Y"):
            x_mask |= 1 << shift
        if letter in ("Z", "Y"):
            z_mask |= 1 << shift
        if letter == "Y":
            n_y += 1
    scalar = ps.phase
    for _ in range(n_y % 4):
        scalar = scalar * quat.I
    indices = np.arange(dim)
    signs = 1.0 - 2.0 * (np.bitwise_count(indices & z_mask) & 1)
    rotated = (reg.amps.components @ left_mul_matrix(scalar).T) * signs[:, None]
    out = np.empty_like(rotated)
    out[indices ^ x_mask] = rotated
    return QRegister.from_components(n, out)


def measure_stabilizer_eigenvalue(reg: QRegister, s: PauliString, tol: float = quat.TOLERANCE) -> int:
    """Exact +-1 eigenvalue of ``s`` on ``reg``; raises if ``reg`` is not an eigenstate."""
    moved = apply_pauli(s, reg)
    if moved.amps.isclose(reg.amps, tol):
        return 1
    negated = QVector.from_components(-moved.amps.components)
    if negated.isclose(reg.amps, tol):
        return -1
    raise ValueError(f"register is not a +-1 eigenstate of {s.word()}")


def stabilizer_expectation_sign(reg: QRegister, s: PauliString) -> int:
    """Sign of the real part of ``<reg| s |reg>`` (0 when it vanishes)."""
    value = inner_product(reg.amps, apply_pauli(s, reg).amps).w
    if value > 0.0:
        return 1
    if value < 0.0:
        return -1
    return 0


def state_based_syndrome(e: PauliString, code: StabilizerCode, codeword: int = 0) -> Syndrome:
    """Syndrome measured on a damaged codeword instead of via commutation.

    Applies ``e`` to the chosen codeword and reads each generator's exact
    eigenvalue.  Valid only for codes whose codewords the generators fix,
    which is what makes it an independent check of :func:`syndrome_of`.
    """
    cw = code.codeword_zero if codeword == 0 else code.codeword_one
    damaged = apply_pauli(e, cw)
    return Syndrome(tuple(measure_stabilizer_eigenvalue(damaged, g) for g in code.generators))


# -- codeword verification ------------------------------------------------

@dataclass(frozen=True)
class CodewordCheck:
    generator: str
    fixes_zero: bool
    fixes_one: bool


@dataclass(frozen=True)
class CodewordReport:
    code_id: str
    checks: tuple[CodewordCheck, ...]
    logical_z_ok: bool
    logical_x_ok: bool

    @property
    def passed(self) -> bool:
        return (
            all(c.fixes_zero and c.fixes_one for c in self.checks)
            and self.logical_z_ok
            and self.logical_x_ok
        )

    @property
    def failing_generators(self) -> tuple[str, ...]:
        return tuple(c.generator for c in self.checks if not (c.fixes_zero and c.fixes_one))


def _is_plus_one_eigenvector(ps: PauliString, reg: QRegister) -> bool:
    return apply_pauli(ps, reg).amps.isclose(reg.amps, quat.TOLERANCE)


def verify_codewords(code: StabilizerCode) -> CodewordReport:
    """Check the generators fix both codewords and the logicals act as declared."""
    checks = tuple(
        CodewordCheck(
            generator=g.word(),
            fixes_zero=_is_plus_one_eigenvector(g, code.codeword_zero),
            fixes_one=_is_plus_one_eigenvector(g, code.codeword_one),
        )
        for g in code.generators
    )
    z0 = apply_pauli(code.logical_z, code.codeword_zero)
    z1 = apply_pauli(code.logical_z, code.codeword_one)
    minus_one = QRegister.from_components(code.n, -code.codeword_one.amps.components)
    logical_z_ok = z0.isclose(code.codeword_zero) and z1.isclose(minus_one)
    x0 = apply_pauli(code.logical_x, code.codeword_zero)
    x1 = apply_pauli(code.logical_x, code.codeword_one)
    logical_x_ok = x0.isclose(code.codeword_one) and x1.isclose(code.codeword_zero)
    return CodewordReport(code.code_id, checks, logical_z_ok, logical_x_ok)


# -- shipped codes ---------------------------------------------------------

def three_qubit_code() -> StabilizerCode:
    """3-qubit bit-flip construction: ZZI, IZZ on codewords |000>, |111>.

    The declared distance 3 is the bit-flip distance (one X error is
    correctable); phase errors are invisible to these generators.
    """
    return StabilizerCode(
        code_id="three",
        n=3,
        k=1,
        d=3,
        generators=(PauliString.from_word("ZZI"), PauliString.from_word("IZZ")),
        logical_x=PauliString.from_word("XXX"),
        logical_z=PauliString.from_word("ZZZ"),
        codeword_zero=QRegister.computational(3, "000"),
        codeword_one=QRegister.computational(3, "111"),
    )


def paper_five_qubit_code() -> StabilizerCode:
    """Published five-qubit variant: XXXXI, ZZIII, IZZII, IIZZZ.

    Ships exactly as printed.  The first generator does not fix the
    claimed codewords |00000>, |11111>, and several single-qubit errors
    share syndromes; :func:`verify_codewords` and
    :func:`audit_against_paper` record both facts.
    """
    return StabilizerCode(
        code_id="paper5",
        n=5,
        k=1,
        d=3,
        generators=(
            PauliString.from_word("XXXXI"),
            PauliString.from_word("ZZIII"),
            PauliString.from_word("IZZII"),
            PauliString.from_word("IIZZZ"),
        ),
        logical_x=PauliString.from_word("XXXXX"),
        logical_z=PauliString.from_word("ZZZZZ"),
        codeword_zero=QRegister.computational(5, "00000"),
        codeword_one=QRegister.computational(5, "11111"),
    )


def standard_perfect_code() -> StabilizerCode:
    """Textbook [[5,1,3]] code with cyclic generators XZZXI, IXZZX, XIXZZ, ZXIXZ.

    Codewords are built by projecting |00000> onto the joint +1 eigenspace,
    so ``verify_codewords`` passes and all 15 single-qubit errors have
    distinct nontrivial syndromes.
    """
    generators = (
        PauliString.from_word("XZZXI"),
        PauliString.from_word("IXZZX"),
        PauliString.from_word("XIXZZ"),
        PauliString.from_word("ZXIXZ"),
    )
    logical_x = PauliString.from_word("XXXXX")
    seed = QRegister.computational(5, "00000")
    arr = seed.amps.components.copy()
    for g in generators:
        reg = QRegister.from_components(5, arr)
        arr = (arr + apply_pauli(g, reg).amps.components) / 2.0
    norm = float(np.sqrt(np.sum(arr * arr)))
    zero = QRegister.from_components(5, arr / norm)
    one = apply_pauli(logical_x, zero)
    return StabilizerCode(
        code_id="perfect5",
        n=5,
        k=1,
        d=3,
        generators=generators,
        logical_x=logical_x,
        logical_z=PauliString.from_word("ZZZZZ"),
        codeword_zero=zero,
        codeword_one=one,
    )


_CODE_FACTORIES = {
    "three": three_qubit_code,
    "paper5": paper_five_qubit_code,
    "perfect5": standard_perfect_code,
}

CODE_IDS = tuple(_CODE_FACTORIES)


def get_code(code_id: str) -> StabilizerCode:
    try:
        factory = _CODE_FACTORIES[code_id]
    except KeyError:
        raise ValueError(f"unknown code id {code_id!r}; known: {', '.join(CODE_IDS)}") from None
    return factory()


# -- syndrome tables and the published-table audit -------------------------

@dataclass(frozen=True)
class SyndromeTableRow:
    qubit: int
    letter: str
    phase: Quaternion
    error_label: str
    variants: tuple[str, ...]
    syndrome: Syndrome


@dataclass(frozen=True)
class SyndromeTable:
    code_id: str
    generator_count: int
    rows: tuple[SyndromeTableRow, ...]

    def row(self, letter: str, qubit: int) -> SyndromeTableRow:
        for r in self.rows:
            if r.letter == letter and r.qubit == qubit:
                return r
        raise KeyError(f"no row for {letter}{qubit}")


def build_syndrome_table(
    code: StabilizerCode, phases: Sequence[Quaternion] | None = None
) -> SyndromeTable:
    """Syndromes for every single-qubit X/Y/Z error, with phased variants.

    Each row is a letter-level error annotated with its unit-phased
    spellings; by default the paired unit for the letter (``iX``, ``jY``,
    ``kZ``).  Passing ``phases`` annotates every row with each listed
    phase instead.  All variants share the row's syndrome, which is
    asserted during the build.
    """
    rows = []
    for qubit in range(1, code.n + 1):
        for letter in _ERROR_LETTERS:
            error = PauliString.single(code.n, qubit, letter)
            syndrome = syndrome_of(error, code)
            row_phases = tuple(phases) if phases is not None else (UNIT_FOR_LETTER[letter],)
            variants = []
            for ph in row_phases:
                variant = PauliString.single(code.n, qubit, letter, ph)
                if syndrome_of(variant, code) != syndrome:
                    raise AssertionError("phased variant changed a syndrome")
                variants.append(variant.label)
            rows.append(
                SyndromeTableRow(
                    qubit=qubit,
                    letter=letter,
                    phase=row_phases[0],
                    error_label=f"{letter}{qubit}",
                    variants=tuple(variants),
                    syndrome=syndrome,
                )
            )
    return SyndromeTable(code.code_id, len(code.generators), tuple(rows))


#: Published syndrome assignments for the paper5 code, stored verbatim as
#: audit reference data (they disagree with the commutation rule above).
REFERENCE_TABLE2: dict[tuple[str, int], tuple[int, int, int, int]] = {
    ("X", 1): (-1, -1, 1, 1),
    ("Y", 1): (-1, -1, 1, 1),
    ("Z", 1): (1, -1, 1, 1),
    ("X", 2): (-1, -1, -1, 1),
    ("Y", 2): (-1, -1, -1, 1),
    ("Z", 2): (1, -1, -1, 1),
    ("X", 3): (-1, 1, -1, -1),
    ("Y", 3): (-1, 1, -1, -1),
    ("Z", 3): (1, 1, -1, -1),
    ("X", 4): (-1, 1, 1, -1),
    ("Y", 4): (-1, 1, 1, -1),
    ("Z", 4): (1, 1, 1, -1),
    ("X", 5): (1, 1, 1, -1),
    ("Y", 5): (1, 1, 1, -1),
    ("Z", 5): (1, 1, 1, -1),
}


@dataclass(frozen=True)
class AuditRow:
    error_label: str
    computed: Syndrome
    reference: Syndrome
    match: bool


@dataclass(frozen=True)
class AuditReport:
    """Row-by-row diff of the computed paper5 table against the published one."""

    rows: tuple[AuditRow, ...]
    mismatch_count: int
    collisions: dict[tuple[int, ...], tuple[str, ...]]
    trivial_syndrome_errors: tuple[str, ...]


def audit_against_paper(table: SyndromeTable) -> AuditReport:
    """Compare a computed paper5 syndrome table with the published rows.

    Also reports computed-table collisions (distinct errors sharing a
    syndrome) and errors whose computed syndrome is trivial.
    """
    if table.code_id != "paper5":
        raise ValueError("the published reference table applies to the paper5 code only")
    rows = []
    mismatches = 0
    by_syndrome: dict[tuple[int, ...], list[str]] = {}
    trivial = []
    for row in table.rows:
        reference = Syndrome(REFERENCE_TABLE2[(row.letter, row.qubit)])
        match = row.syndrome == reference
        mismatches += not match
        rows.append(AuditRow(row.error_label, row.syndrome, reference, match))
        by_syndrome.setdefault(row.syndrome.bits, []).append(row.error_label)
        if row.syndrome.trivial:
            trivial.append(row.error_label)
    collisions = {
        bits: tuple(labels) for bits, labels in by_syndrome.items() if len(labels) > 1
    }
    return AuditReport(tuple(rows), mismatches, collisions, tuple(trivial))


# -- single-quaternion-slot codeword bookkeeping ---------------------------

#: Expansion of one quaternion slot into two computational bits.
HQUBIT_BASIS_EXPANSION = {"1": "00", "i": "01", "j": "10", "k": "11"}


def hqubit_expand(label: str) -> str:
    """Two-bit computational label for a unit slot value: 1->00, i->01, j->10, k->11."""
    try:
        return HQUBIT_BASIS_EXPANSION[label]
    except KeyError:
        raise ValueError(f"label must be one of 1, i, j, k, got {label!r}") from None


def hqubit_contract(bits: str) -> str:
    for label, expansion in HQUBIT_BASIS_EXPANSION.items():
        if bits == expansion:
            return label
    raise ValueError(f"bits must be one of 00, 01, 10, 11, got {bits!r}")


#: Slot-value labellings: which unit each display label stands for.
#: "0d"/"1d" are the dotted labels.  The prose mapping and the mapping the
#: printed tables actually use disagree; both ship so neither is guessed.
MAPPING_TEXT = {"1": "0", "i": "0d", "j": "1", "k": "1d"}
MAPPING_TABLE = {"1": "0", "i": "1", "j": "0d", "k": "1d"}

_UNIT_BY_NAME = {"1": quat.ONE, "i": quat.I, "j": quat.J, "k": quat.K}

#: Published codeword transformation rows: (codeword label, unit) ->
#: (sign, transformed first-slot label).
REFERENCE_CODEWORD_ACTION = {
    ("0", "i"): (1, "1"),
    ("0", "j"): (1, "0d"),
    ("0", "k"): (1, "1d"),
    ("1", "i"): (-1, "0"),
    ("1", "j"): (-1, "1d"),
    ("1", "k"): (1, "0d"),
}


@dataclass(frozen=True)
class CodewordActionRow:
    codeword: str
    unit: str
    sign: int
    label: str
    expanded: str
    reference_sign: int
    reference_label: str

    @property
    def match(self) -> bool:
        return (self.sign, self.label) == (self.reference_sign, self.reference_label)


def _unit_decompose(q: Quaternion) -> tuple[int, str]:
    for name, unit in _UNIT_BY_NAME.items():
        if q == unit:
            return 1, name
        if q == -unit:
            return -1, name
    raise ValueError(f"{q} is not a signed unit")


def codeword_action_table(
    unit: str, mapping: Mapping[str, str]
) -> tuple[CodewordActionRow, ...]:
    """Right-multiply each codeword's first slot value by a unit.

    ``mapping`` assigns distinct display labels to the slot values 1, i,
    j, k; the codeword rows are the preimages of labels "0" and "1".  The
    product is re-expressed as a signed mapped label, with the published
    rows attached for diffing and the two-bit expansion of the product
    unit included.
    """
    if unit not in ("i", "j", "k"):
        raise ValueError(f"unit must be one of i, j, k, got {unit!r}")
    if set(mapping) != {"1", "i", "j", "k"}:
        raise ValueError("mapping must assign labels to exactly 1, i, j, k")
    if len(set(mapping.values())) != 4:
        raise ValueError("mapping labels must be distinct")
    label_to_unit = {label: name for name, label in mapping.items()}
    rows = []
    for codeword in ("0", "1"):
        slot_value = _UNIT_BY_NAME[label_to_unit[codeword]]
        sign, product_unit = _unit_decompose(slot_value * _UNIT_BY_NAME[unit])
        ref_sign, ref_label = REFERENCE_CODEWORD_ACTION[(codeword, unit)]
        rows.append(
            CodewordActionRow(
                codeword=codeword,
                unit=unit,
                sign=sign,
                label=mapping[product_unit],
                expanded=hqubit_expand(product_unit),
                reference_sign=ref_sign,
                reference_label=ref_label,
            )
        )
    return tuple(rows)


def codeword_action_diff(mapping: Mapping[str, str]) -> tuple[tuple[CodewordActionRow, ...], int]:
    """All six codeword-action rows plus the count matching the published table."""
    rows = tuple(
        row for unit in ("i", "j", "k") for row in codeword_action_table(unit, mapping)
    )
    return rows, sum(1 for row in rows if row.match)
