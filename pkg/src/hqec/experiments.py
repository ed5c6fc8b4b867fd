"""Monte Carlo logical-error-rate estimation, scaling fits, and paired sweeps.

A trial samples one error event, decodes the commutation syndrome, and
scores failure on two independent channels:

* Pauli channel: the residual operator (error composed with the decoded
  correction) fails when it anticommutes with a logical representative.
  This is pure operator algebra; phases cannot flip a commutator, so only
  the letters decide.
* Rotation channel: when the event carries rotations, they are applied to
  the ``|0_L>`` codeword and the register fails when its j/k strength
  excess stays above the detection threshold.  A pipeline with
  quaternionic detection enabled first locates flagged qubits and undoes
  their rotations with the sampled parameters (oracle correction); the
  baseline pipeline never corrects, so with shared seeds its failure set
  contains the detecting pipeline's by construction.

Sweeps derive every trial from ``(seed, trial)`` alone, which makes the
results independent of the parallelism degree (``HQEC_THREADS``) and lets
paired configurations share their noise realizations.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import (
    DecodeOutcome,
    PauliString,
    StabilizerCode,
    _commute_letters,
    decode,
    get_code,
    syndrome_of,
)
from .noise import ErrorEvent, ErrorSampler, NoiseModel, correct_rotation, detect_rotations, jk_excess, sample_error
from .register import QRegister
from .noise import _rotate_components

#: Published performance targets, attached to outputs as annotations only.
TARGET_STANDARD_EXPONENT = 2.0
TARGET_STANDARD_P_TH = 0.01
TARGET_QUATERNIONIC_EXPONENT = 2.2
TARGET_QUATERNIONIC_P_TH = 0.015

DEFAULT_DETECTION_THRESHOLD = 0.01


@dataclass(frozen=True)
class SweepConfig:
    """One logical-error-rate sweep: a code, a noise template, and a p grid."""

    code_id: str
    noise: NoiseModel
    p_values: tuple[float, ...]
    trials: int
    seed: int
    quaternionic_detection: bool = False
    detection_threshold: float = DEFAULT_DETECTION_THRESHOLD

    def __post_init__(self) -> None:
        object.__setattr__(self, "p_values", tuple(float(p) for p in self.p_values))
        if not self.p_values:
            raise ValueError("p_values must be nonempty")
        for p in self.p_values:
            if not 0.0 <= p < 1.0:
                raise ValueError(f"p values must lie in [0, 1), got {p}")
        if any(b <= a for a, b in zip(self.p_values, self.p_values[1:])):
            raise ValueError("p_values must be strictly increasing")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")


@dataclass(frozen=True)
class SweepPoint:
    p: float
    failures: int
    trials: int
    p_L: float
    stderr: float


@dataclass(frozen=True)
class SweepResult:
    code_id: str
    seed: int
    points: tuple[SweepPoint, ...]


@dataclass(frozen=True)
class FitResult:
    """Log-log line fit of a (p, p_L) curve.

    ``p_th`` follows the intercept convention ``exp(-intercept / slope)``;
    ``p_th_crossing`` is where the fitted line meets ``p_L == p`` (``None``
    when the slope is too close to 1 for that to exist).
    """

    exponent: float
    p_th: float
    p_th_crossing: float | None
    residual: float

    def lambda_at(self, p: float) -> float:
        """Suppression factor estimate ``p_th / p`` for a distance +2 step."""
        if p <= 0.0:
            raise ValueError("p must be positive")
        return self.p_th / p


def closed_form_three_qubit(p: float) -> float:
    """Failure probability of the 3-qubit bit-flip construction: ``3 p^2 (1-p) + p^3``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    return 3.0 * p * p * (1.0 - p) + p**3


def scaling_model(p: float, p_th: float, d: int) -> float:
    """Suppression law ``(p / p_th) ** ((d + 1) // 2)``."""
    if p_th <= 0.0:
        raise ValueError("p_th must be positive")
    if d < 1:
        raise ValueError("d must be >= 1")
    return (p / p_th) ** ((d + 1) // 2)


def suppression_factor(p_L_d: float, p_L_d2: float) -> float:
    """Ratio of logical error rates between distances d and d + 2."""
    if p_L_d <= 0.0 or p_L_d2 <= 0.0:
        raise ValueError("logical error rates must be positive")
    return p_L_d / p_L_d2


_LETTER_INDEX = {"I": 0, "X": 1, "Y": 2, "Z": 3}
_LETTER_LIST = ("I", "X", "Y", "Z")
# Product of two Pauli letters, phases dropped (phases cannot affect the
# commutation checks the scorer performs).
_LETTER_PRODUCT = {
    (a, b): (
        "I"
        if a == b
        else (b if a == "I" else (a if b == "I" else next(c for c in "XYZ" if c not in (a, b))))
    )
    for a in _LETTER_LIST
    for b in _LETTER_LIST
}


def _compose_letters(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(_LETTER_PRODUCT[(la, lb)] for la, lb in zip(a, b))


def score_event(
    code: StabilizerCode,
    event: ErrorEvent,
    quaternionic_detection: bool = False,
    detection_threshold: float = DEFAULT_DETECTION_THRESHOLD,
) -> bool:
    """Score one already-sampled event; True means logical failure.

    Pauli letters are scored algebraically against the decoded correction;
    rotations are scored on the ``|0_L>`` codeword as residual j/k
    strength after whatever corrections the pipeline performs.
    """
    outcome = decode(syndrome_of(event.pauli, code), code)
    if outcome.unknown:
        pauli_failed = True
    else:
        residual = _compose_letters(event.pauli.letters, outcome.correction.letters)
        pauli_failed = (
            _commute_letters(residual, code.logical_x.letters) == -1
            or _commute_letters(residual, code.logical_z.letters) == -1
        )
    if pauli_failed:
        return True
    if not event.rotations:
        return False
    reference = code.codeword_zero
    comp = reference.amps.components.copy()
    for rot in event.rotations:
        comp = _rotate_components(comp, code.n, rot.qubit, rot.axis, rot.angle, event.rot_mode)
    damaged = QRegister.from_components(code.n, comp)
    if quaternionic_detection:
        flagged = {
            flag.qubit
            for flag in detect_rotations(damaged, reference, detection_threshold, event.rot_mode)
        }
        for rot in event.rotations:
            if rot.qubit in flagged:
                damaged = correct_rotation(damaged, rot.qubit, rot.axis, rot.angle, event.rot_mode)
    return jk_excess(damaged, reference) > detection_threshold


def run_trial(
    code: StabilizerCode,
    noise: NoiseModel,
    seed: int,
    trial: int,
    quaternionic_detection: bool = False,
    detection_threshold: float = DEFAULT_DETECTION_THRESHOLD,
) -> bool:
    """Sample the event for ``(seed, trial)`` and score it; True means failure."""
    event = sample_error(noise, code.n, seed, trial)
    return score_event(code, event, quaternionic_detection, detection_threshold)


def _thread_count() -> int:
    raw = os.environ.get("HQEC_THREADS")
    if raw is None:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HQEC_THREADS must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"HQEC_THREADS must be >= 0, got {value}")
    if value == 0:
        return os.cpu_count() or 1
    return value


def _count_failures(
    code_id: str,
    noise: NoiseModel,
    seed: int,
    start: int,
    stop: int,
    quaternionic_detection: bool,
    detection_threshold: float,
) -> int:
    code = get_code(code_id)
    sampler = ErrorSampler(noise, code.n, seed)
    failures = 0
    for trial in range(start, stop):
        event = sampler.sample(trial)
        failures += score_event(code, event, quaternionic_detection, detection_threshold)
    return failures


def run_sweep(config: SweepConfig) -> SweepResult:
    """Estimate the logical error rate at every p in the grid.

    Trial ``t`` at every p point reuses the stream keyed by
    ``(config.seed, t)``, so the counts are reproducible bit for bit
    regardless of ``HQEC_THREADS`` and adjacent points are positively
    coupled (common random numbers).
    """
    get_code(config.code_id)  # validate the id before any work
    workers = _thread_count()
    points = []
    for p in config.p_values:
        noise_p = config.noise.with_p(p)
        failures = _run_point(config, noise_p, workers)
        p_l = failures / config.trials
        stderr = math.sqrt(p_l * (1.0 - p_l) / config.trials)
        points.append(SweepPoint(p, failures, config.trials, p_l, stderr))
    return SweepResult(config.code_id, config.seed, tuple(points))


def _run_point(config: SweepConfig, noise_p: NoiseModel, workers: int) -> int:
    args = (config.code_id, noise_p, config.seed)
    tail = (config.quaternionic_detection, config.detection_threshold)
    if workers <= 1 or config.trials < 2 * workers:
        return _count_failures(*args, 0, config.trials, *tail)
    bounds = np.linspace(0, config.trials, workers + 1, dtype=int)
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_count_failures, *args, int(a), int(b), *tail)
                for a, b in zip(bounds[:-1], bounds[1:])
            ]
            return sum(f.result() for f in futures)
    except (OSError, PermissionError):
        # Restricted environments without process support; identical
        # counts either way because trials are keyed individually.
        return _count_failures(*args, 0, config.trials, *tail)


def fit_threshold(result: SweepResult) -> FitResult:
    """Least-squares line fit of ``log(p_L)`` against ``log(p)``.

    Zero-failure points carry no log-space information and are excluded
    with a warning; fewer than three usable points, or a degenerate
    (constant) curve, is an error.
    """
    zero_ps = [point.p for point in result.points if point.p_L <= 0.0]
    usable = [(point.p, point.p_L) for point in result.points if point.p_L > 0.0]
    if zero_ps:
        warnings.warn(
            f"excluding {len(zero_ps)} zero-failure point(s) at p = {zero_ps}",
            stacklevel=2,
        )
    if len(usable) < 3:
        raise ValueError(f"need at least 3 points with p_L > 0, have {len(usable)}")
    x = np.log([p for p, _ in usable])
    y = np.log([pl for _, pl in usable])
    if np.ptp(x) == 0.0 or np.ptp(y) == 0.0:
        raise ValueError("degenerate fit: constant p or constant p_L")
    slope, intercept = np.polyfit(x, y, 1)
    if slope == 0.0:
        raise ValueError("degenerate fit: zero slope")
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    p_th = float(np.exp(-intercept / slope))
    if abs(slope - 1.0) > 1e-9:
        crossing = float(np.exp(-intercept / (slope - 1.0)))
    else:
        crossing = None
    return FitResult(exponent=float(slope), p_th=p_th, p_th_crossing=crossing, residual=residual)


@dataclass(frozen=True)
class Figure1Data:
    """Paired standard/quaternionic sweeps with their fits and target annotations."""

    standard: SweepResult
    quaternionic: SweepResult
    standard_fit: FitResult | None
    quaternionic_fit: FitResult | None


def figure1_data(
    standard_config: SweepConfig, quaternionic_config: SweepConfig
) -> Figure1Data:
    """Run a paired comparison of the two decoding pipelines.

    The configs must differ only in ``quaternionic_detection`` (and, if
    desired, the rotation parameters of the noise); code, grid, trials and
    seed are shared so the pipelines see the same realizations.
    """
    if standard_config.quaternionic_detection:
        raise ValueError("standard_config must have quaternionic_detection disabled")
    if not quaternionic_config.quaternionic_detection:
        raise ValueError("quaternionic_config must have quaternionic_detection enabled")
    for attr in ("code_id", "p_values", "trials", "seed"):
        if getattr(standard_config, attr) != getattr(quaternionic_config, attr):
            raise ValueError(f"paired configs must share {attr}")
    standard = run_sweep(standard_config)
    quaternionic = run_sweep(quaternionic_config)

    def _try_fit(result: SweepResult) -> FitResult | None:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                return fit_threshold(result)
        except ValueError:
            return None

    return Figure1Data(standard, quaternionic, _try_fit(standard), _try_fit(quaternionic))


# -- text formats -----------------------------------------------------------

def _g12(value: float) -> str:
    return f"{value:.12g}"


SWEEP_CSV_HEADER = "code_id,p,trials,failures,p_L,stderr,seed"


def sweep_csv(result: SweepResult) -> str:
    lines = [SWEEP_CSV_HEADER]
    for pt in result.points:
        lines.append(
            f"{result.code_id},{_g12(pt.p)},{pt.trials},{pt.failures},"
            f"{_g12(pt.p_L)},{_g12(pt.stderr)},{result.seed}"
        )
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> SweepResult:
    reader = csv.DictReader(io.StringIO(text))
    expected = SWEEP_CSV_HEADER.split(",")
    if reader.fieldnames != expected:
        raise ValueError(f"bad CSV header: expected {expected}, got {reader.fieldnames}")
    rows = list(reader)
    if not rows:
        raise ValueError("CSV has no data rows")
    points = tuple(
        SweepPoint(
            p=float(r["p"]),
            failures=int(r["failures"]),
            trials=int(r["trials"]),
            p_L=float(r["p_L"]),
            stderr=float(r["stderr"]),
        )
        for r in rows
    )
    return SweepResult(rows[0]["code_id"], int(rows[0]["seed"]), points)


def fit_json(fit: FitResult) -> str:
    payload = {
        "slope": fit.exponent,
        "p_th_intercept": fit.p_th,
        "p_th_crossing": fit.p_th_crossing,
        "residual": fit.residual,
    }
    return json.dumps(payload)


FIGURE1_CSV_HEADER = (
    "pipeline,code_id,p,trials,failures,p_L,stderr,seed,target_exponent,target_p_th"
)


def figure1_csv(data: Figure1Data, include_model_curves: bool = False) -> str:
    """Combined CSV for a paired sweep, annotated with the published targets.

    With ``include_model_curves`` the suppression-law curves evaluated at
    the target parameters are appended as extra, clearly labelled rows
    (zero trials) so simulated and model-generated data stay distinct.
    """
    lines = [FIGURE1_CSV_HEADER]

    def _rows(label: str, result: SweepResult, exponent: float, p_th: float):
        for pt in result.points:
            lines.append(
                f"{label},{result.code_id},{_g12(pt.p)},{pt.trials},{pt.failures},"
                f"{_g12(pt.p_L)},{_g12(pt.stderr)},{result.seed},"
                f"{_g12(exponent)},{_g12(p_th)}"
            )

    _rows("standard", data.standard, TARGET_STANDARD_EXPONENT, TARGET_STANDARD_P_TH)
    _rows(
        "quaternionic",
        data.quaternionic,
        TARGET_QUATERNIONIC_EXPONENT,
        TARGET_QUATERNIONIC_P_TH,
    )
    if include_model_curves:
        for label, result, exponent, p_th in (
            ("standard_model", data.standard, TARGET_STANDARD_EXPONENT, TARGET_STANDARD_P_TH),
            (
                "quaternionic_model",
                data.quaternionic,
                TARGET_QUATERNIONIC_EXPONENT,
                TARGET_QUATERNIONIC_P_TH,
            ),
        ):
            # The target exponents are fit values, not integer distances, so
            # the curve is evaluated directly rather than via scaling_model.
            for pt in result.points:
                model_pl = (pt.p / p_th) ** exponent
                lines.append(
                    f"{label},{result.code_id},{_g12(pt.p)},0,0,"
                    f"{_g12(model_pl)},0,{result.seed},{_g12(exponent)},{_g12(p_th)}"
                )
    return "\n".join(lines) + "\n"


def figure1_fits_json(data: Figure1Data) -> str:
    def _fit_payload(fit: FitResult | None):
        if fit is None:
            return None
        return {
            "slope": fit.exponent,
            "p_th_intercept": fit.p_th,
            "p_th_crossing": fit.p_th_crossing,
            "residual": fit.residual,
        }

    payload = {
        "standard": _fit_payload(data.standard_fit),
        "quaternionic": _fit_payload(data.quaternionic_fit),
        "targets": {
            "standard": {"exponent": TARGET_STANDARD_EXPONENT, "p_th": TARGET_STANDARD_P_TH},
            "quaternionic": {
                "exponent": TARGET_QUATERNIONIC_EXPONENT,
                "p_th": TARGET_QUATERNIONIC_P_TH,
            },
        },
    }
    return json.dumps(payload)
