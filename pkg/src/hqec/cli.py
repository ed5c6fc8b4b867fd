"""Command-line interface.

Subcommands::

    bell            print the two-qubit benchmark state and gate audits
    verify          machine-readable audit summary line
    audit           full published-table diff and codeword verification
    syndrome-table  per-error syndrome table as CSV or text
    mc              Monte Carlo logical-error-rate sweep to CSV
    fit             log-log threshold fit of a sweep CSV
    figure1         paired standard/quaternionic sweep with annotations
    report          combined human-readable report

Exit codes: 0 ok, 1 internal error, 2 usage error, 3 config validation
error.  All randomness flows from ``--seed`` (default 0); repeated runs
with the same configuration produce byte-identical output regardless of
the ``HQEC_THREADS`` parallelism cap.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from . import quaternion as quat
from .quaternion import ImaginaryAxis, format_quaternion
from .linalg import is_unitary, matrix_to_dict, phase_alignment_check
from .register import (
    bell_prepare,
    cnot_gate,
    hadamard_gate,
    identity_gate,
    pauli_gate,
    phased_pauli_gate,
    t_gate,
)
from .codes import (
    CODE_IDS,
    MAPPING_TABLE,
    MAPPING_TEXT,
    audit_against_paper,
    build_syndrome_table,
    codeword_action_diff,
    get_code,
    verify_codewords,
)
from .noise import AngleDistribution, NoiseModel
from .experiments import (
    SweepConfig,
    figure1_csv,
    figure1_data,
    figure1_fits_json,
    fit_json,
    fit_threshold,
    parse_sweep_csv,
    run_sweep,
    sweep_csv,
)

DEFAULT_SEED = 0


class ConfigError(Exception):
    """Configuration or validation problem; maps to exit code 3."""


@dataclass
class RunConfig:
    command: str
    parameters: dict
    seed: int
    output_path: str | None


def _parse_p_range(spec: str) -> tuple[float, ...]:
    parts = spec.split(":")
    if len(parts) != 4:
        raise ConfigError(f"p range must be start:stop:scale:count, got {spec!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[3])
    except ValueError:
        raise ConfigError(f"p range has non-numeric fields: {spec!r}") from None
    scale = parts[2]
    if scale not in ("log", "lin"):
        raise ConfigError(f"p range scale must be 'log' or 'lin', got {scale!r}")
    if count < 1:
        raise ConfigError(f"p range count must be >= 1, got {count}")
    if not (0.0 < start < 1.0 and 0.0 < stop < 1.0):
        raise ConfigError(f"p range endpoints must lie in (0, 1): {spec!r}")
    if count == 1:
        return (start,)
    if start >= stop:
        raise ConfigError(f"p range must be ascending, got {spec!r}")
    if scale == "log":
        ratio = (stop / start) ** (1.0 / (count - 1))
        values = [start * ratio**k for k in range(count)]
    else:
        step = (stop - start) / (count - 1)
        values = [start + step * k for k in range(count)]
    values[-1] = stop
    return tuple(values)


def _parse_axis(spec: str) -> ImaginaryAxis:
    named = {"i": quat.I_AXIS, "j": quat.J_AXIS, "k": quat.K_AXIS}
    if spec in named:
        return named[spec]
    parts = spec.split(",")
    if len(parts) != 3:
        raise ConfigError(f"rot-axis must be i|j|k or x,y,z, got {spec!r}")
    try:
        x, y, z = (float(v) for v in parts)
        return ImaginaryAxis.normalized(x, y, z)
    except ValueError as exc:
        raise ConfigError(f"bad rot-axis {spec!r}: {exc}") from None


def _parse_angle(spec: str) -> AngleDistribution:
    parts = spec.split(":")
    if len(parts) != 2 or parts[0] not in ("fixed", "uniform"):
        raise ConfigError(f"rot-angle must be fixed:THETA or uniform:THETA_MAX, got {spec!r}")
    try:
        theta = float(parts[1])
    except ValueError:
        raise ConfigError(f"rot-angle has a non-numeric angle: {spec!r}") from None
    return AngleDistribution(parts[0], theta)


def _parse_weights(spec: str) -> tuple[float, float, float]:
    parts = spec.split(",")
    if len(parts) != 3:
        raise ConfigError(f"weights must be wx,wy,wz, got {spec!r}")
    try:
        wx, wy, wz = (float(v) for v in parts)
    except ValueError:
        raise ConfigError(f"weights have non-numeric fields: {spec!r}") from None
    return (wx, wy, wz)


# Flag name -> config-file key name is the identity; these are the keys a
# --config JSON may provide for the mc/figure1 commands.
_MC_CONFIG_KEYS = {
    "code",
    "p",
    "trials",
    "seed",
    "out",
    "weights",
    "phase_mode",
    "rotations",
    "rot_axis",
    "rot_angle",
    "rot_mode",
    "detect",
    "threshold",
    "noise",
}


def _load_config_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config file must hold a JSON object")
    unknown = set(data) - _MC_CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config key: {sorted(unknown)[0]}")
    return data


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hqec",
        description="Quaternion-amplitude stabilizer-code laboratory.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bell = sub.add_parser("bell", help="print the benchmark state and gate audits")
    p_bell.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="machine-readable audit summary")
    p_verify.add_argument("--out", default=None)

    p_audit = sub.add_parser("audit", help="published-table diff and codeword checks")
    p_audit.add_argument("--format", default="text", choices=("text", "json"))
    p_audit.add_argument("--out", default=None)

    p_table = sub.add_parser("syndrome-table", help="single-qubit error syndrome table")
    p_table.add_argument("--code", required=True, choices=CODE_IDS)
    p_table.add_argument("--format", default="csv", choices=("csv", "text"))
    p_table.add_argument("--out", default=None)

    p_mc = sub.add_parser("mc", help="Monte Carlo logical-error-rate sweep")
    p_mc.add_argument("--code", default=None, choices=CODE_IDS)
    p_mc.add_argument("--p", default=None, help="range start:stop:{log|lin}:count")
    p_mc.add_argument("--trials", type=int, default=None)
    p_mc.add_argument("--seed", type=int, default=None)
    p_mc.add_argument("--weights", default=None, help="Pauli mixture wx,wy,wz")
    p_mc.add_argument("--phase-mode", dest="phase_mode", default=None, choices=("none", "table1"))
    p_mc.add_argument("--rotations", type=float, default=None, help="rotation rate per qubit")
    p_mc.add_argument("--rot-axis", dest="rot_axis", default=None, help="i|j|k or x,y,z")
    p_mc.add_argument("--rot-angle", dest="rot_angle", default=None, help="fixed:T or uniform:T")
    p_mc.add_argument("--rot-mode", dest="rot_mode", default=None, choices=("zero", "all"))
    p_mc.add_argument("--detect", action="store_true", default=None,
                      help="enable quaternionic detection and correction")
    p_mc.add_argument("--threshold", type=float, default=None, help="detection threshold")
    p_mc.add_argument("--config", default=None, help="JSON config file; flags override")
    p_mc.add_argument("--out", default=None)

    p_fit = sub.add_parser("fit", help="log-log threshold fit of a sweep CSV")
    p_fit.add_argument("--in", dest="input", required=True)
    p_fit.add_argument("--out", default=None)

    p_fig = sub.add_parser("figure1", help="paired standard/quaternionic sweep")
    p_fig.add_argument("--out", required=True, help="output path prefix")
    p_fig.add_argument("--code", default="perfect5", choices=CODE_IDS)
    p_fig.add_argument("--p", default="0.001:0.03:log:8")
    p_fig.add_argument("--trials", type=int, default=20000)
    p_fig.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_fig.add_argument("--rotations", type=float, default=0.05)
    p_fig.add_argument("--rot-axis", dest="rot_axis", default="k")
    p_fig.add_argument("--rot-angle", dest="rot_angle", default=f"fixed:{math.pi / 8}")
    p_fig.add_argument("--threshold", type=float, default=0.01)
    p_fig.add_argument("--include-model", dest="include_model", action="store_true",
                       help="append suppression-law rows at the target parameters")

    p_report = sub.add_parser("report", help="combined human-readable report")
    p_report.add_argument("--out", default=None)

    return parser


_MC_DEFAULTS = {
    "code": None,  # required
    "p": None,  # required
    "trials": 1000,
    "seed": DEFAULT_SEED,
    "out": None,
    "weights": "0.3333333333333333,0.3333333333333333,0.3333333333333334",
    "phase_mode": "none",
    "rotations": 0.0,
    "rot_axis": "k",
    "rot_angle": f"fixed:{math.pi / 8}",
    "rot_mode": "zero",
    "detect": False,
    "threshold": 0.01,
}


def _merge_mc_parameters(args: argparse.Namespace) -> dict:
    merged = dict(_MC_DEFAULTS)
    noise_section = None
    if args.config is not None:
        file_values = _load_config_file(args.config)
        noise_section = file_values.pop("noise", None)
        merged.update(file_values)
    for key in _MC_DEFAULTS:
        flag_value = getattr(args, key)
        if flag_value is not None:
            merged[key] = flag_value
    if merged["code"] is None:
        raise ConfigError("missing required parameter: code")
    if merged["p"] is None:
        raise ConfigError("missing required parameter: p")
    merged["noise"] = noise_section
    return merged


def parse_args(argv: list[str] | None = None) -> RunConfig:
    """Parse and validate a command line into a :class:`RunConfig`.

    Usage problems exit with code 2 via argparse; validation problems
    raise :class:`ConfigError`, which :func:`main` maps to exit code 3.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    command = args.command

    if command == "mc":
        merged = _merge_mc_parameters(args)
        params = _validate_mc(merged)
        return RunConfig("mc", params, params["seed"], merged.get("out"))

    if command == "fit":
        return RunConfig("fit", {"input": args.input}, DEFAULT_SEED, args.out)

    if command == "figure1":
        params = {
            "code": args.code,
            "p_values": _parse_p_range(args.p),
            "trials": _positive_int("trials", args.trials),
            "seed": _seed_value(args.seed),
            "rotations": _rate("rotations", args.rotations),
            "rot_axis": _parse_axis(args.rot_axis),
            "rot_angle": _parse_angle(args.rot_angle),
            "threshold": float(args.threshold),
            "include_model": bool(args.include_model),
        }
        return RunConfig("figure1", params, params["seed"], args.out)

    if command == "syndrome-table":
        return RunConfig(
            "syndrome-table",
            {"code": args.code, "format": args.format},
            DEFAULT_SEED,
            args.out,
        )

    if command == "audit":
        return RunConfig("audit", {"format": args.format}, DEFAULT_SEED, args.out)

    return RunConfig(command, {}, DEFAULT_SEED, getattr(args, "out", None))


def _positive_int(name: str, value) -> int:
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be an integer, got {value!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be >= 1, got {value}")
    return value


def _seed_value(value) -> int:
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"seed must be an integer, got {value!r}") from None
    if not 0 <= value < 2**64:
        raise ConfigError(f"seed must be in [0, 2**64), got {value}")
    return value


def _rate(name: str, value) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a number, got {value!r}") from None
    if not 0.0 <= value <= 1.0:
        raise ConfigError(f"{name} must be in [0, 1], got {value}")
    return value


def _validate_mc(merged: dict) -> dict:
    if merged["code"] not in CODE_IDS:
        raise ConfigError(f"code must be one of {CODE_IDS}, got {merged['code']!r}")
    p_values = _parse_p_range(str(merged["p"]))
    trials = _positive_int("trials", merged["trials"])
    seed = _seed_value(merged["seed"])
    threshold = float(merged["threshold"])
    if merged["noise"] is not None:
        if not isinstance(merged["noise"], dict):
            raise ConfigError("noise section must be an object")
        try:
            base = NoiseModel.from_dict({"p": 0.0, **merged["noise"]})
        except ValueError as exc:
            raise ConfigError(f"bad noise section: {exc}") from None
        noise = base
    else:
        weights = (
            merged["weights"]
            if isinstance(merged["weights"], (tuple, list))
            else _parse_weights(str(merged["weights"]))
        )
        axis = (
            merged["rot_axis"]
            if isinstance(merged["rot_axis"], ImaginaryAxis)
            else _parse_axis(str(merged["rot_axis"]))
        )
        angle = (
            merged["rot_angle"]
            if isinstance(merged["rot_angle"], AngleDistribution)
            else _parse_angle(str(merged["rot_angle"]))
        )
        try:
            noise = NoiseModel(
                p=0.0,
                pauli_weights=tuple(float(w) for w in weights),
                phase_mode=str(merged["phase_mode"]),
                p_rot=_rate("rotations", merged["rotations"]),
                rot_axis=axis,
                rot_angle=angle,
                rot_mode=str(merged["rot_mode"]),
            )
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
    return {
        "code": merged["code"],
        "p_values": p_values,
        "trials": trials,
        "seed": seed,
        "noise": noise,
        "detect": bool(merged["detect"]),
        "threshold": threshold,
    }


def _emit(text: str, output_path: str | None) -> None:
    if output_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _gate_audit_lines() -> list[str]:
    lines = []
    for gate in (hadamard_gate(), cnot_gate(), pauli_gate("X"), pauli_gate("Y"),
                 pauli_gate("Z"), t_gate(), phased_pauli_gate("X"), phased_pauli_gate("Y"),
                 phased_pauli_gate("Z"), identity_gate()):
        report = is_unitary(gate.matrix)
        verdict = "PASS" if report.passed else "FAIL"
        aligned = phase_alignment_check(gate.matrix)
        lines.append(
            f"gate {gate.name}: unitary={verdict} max_deviation={report.max_deviation:.12g} "
            f"worst_entry={report.worst_entry} phase_aligned={'yes' if aligned else 'no'} "
            f"side={gate.side.value}"
        )
    return lines


def _audit_summary_line() -> str:
    hadamard = is_unitary(hadamard_gate().matrix)
    cnot = is_unitary(cnot_gate().matrix)
    table = build_syndrome_table(get_code("paper5"))
    audit = audit_against_paper(table)
    paper5_words = verify_codewords(get_code("paper5"))
    return (
        f"AUDIT hadamard_unitary={'PASS' if hadamard.passed else 'FAIL'} "
        f"cnot_unitary={'PASS' if cnot.passed else 'FAIL'} "
        f"table2_mismatches={audit.mismatch_count} "
        f"codeword_check_paper5={'PASS' if paper5_words.passed else 'FAIL'}"
    )


def _cmd_bell(config: RunConfig) -> int:
    reg = bell_prepare()
    lines = [f"bell state: {reg.render()}"]
    for gate in (hadamard_gate(), cnot_gate()):
        report = is_unitary(gate.matrix)
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(
            f"gate {gate.name}: unitary={verdict} "
            f"max_deviation={report.max_deviation:.12g} worst_entry={report.worst_entry}"
        )
    _emit("\n".join(lines) + "\n", config.output_path)
    return 0


def _cmd_verify(config: RunConfig) -> int:
    lines = []
    for code_id in CODE_IDS:
        report = verify_codewords(get_code(code_id))
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(f"codewords {code_id}: {verdict}")
    lines.append(_audit_summary_line())
    _emit("\n".join(lines) + "\n", config.output_path)
    return 0


def _codeword_report_lines(code_id: str) -> list[str]:
    report = verify_codewords(get_code(code_id))
    lines = [f"codeword verification [{code_id}]: {'PASS' if report.passed else 'FAIL'}"]
    for check in report.checks:
        lines.append(
            f"  generator {check.generator}: fixes |0_L> "
            f"{'yes' if check.fixes_zero else 'NO'}, fixes |1_L> "
            f"{'yes' if check.fixes_one else 'NO'}"
        )
    lines.append(f"  logical Z action: {'ok' if report.logical_z_ok else 'WRONG'}")
    lines.append(f"  logical X action: {'ok' if report.logical_x_ok else 'WRONG'}")
    return lines


def _audit_json() -> str:
    """Machine-readable audit: gate matrices in the standard serialization
    plus the row-level table diff and codeword verdicts."""
    h, c = hadamard_gate(), cnot_gate()
    audit = audit_against_paper(build_syndrome_table(get_code("paper5")))
    payload = {
        "gates": {
            gate.name: {
                "matrix": matrix_to_dict(gate.matrix),
                "side": gate.side.value,
                "unitary": is_unitary(gate.matrix).passed,
                "max_deviation": is_unitary(gate.matrix).max_deviation,
            }
            for gate in (h, c)
        },
        "table2": {
            "mismatch_count": audit.mismatch_count,
            "rows": [
                {
                    "error": row.error_label,
                    "computed": list(row.computed.bits),
                    "reference": list(row.reference.bits),
                    "match": row.match,
                }
                for row in audit.rows
            ],
            "collisions": {
                ",".join(str(b) for b in bits): list(labels)
                for bits, labels in sorted(audit.collisions.items())
            },
            "trivial_syndrome_errors": list(audit.trivial_syndrome_errors),
        },
        "codewords": {
            code_id: verify_codewords(get_code(code_id)).passed for code_id in CODE_IDS
        },
    }
    return json.dumps(payload)


def _cmd_audit(config: RunConfig) -> int:
    if config.parameters.get("format") == "json":
        _emit(_audit_json() + "\n", config.output_path)
        return 0
    table = build_syndrome_table(get_code("paper5"))
    audit = audit_against_paper(table)
    lines = ["published syndrome table diff [paper5]:"]
    for row in audit.rows:
        status = "match" if row.match else "MISMATCH"
        lines.append(
            f"  {row.error_label}: computed {row.computed} reference {row.reference} {status}"
        )
    lines.append(f"mismatch count: {audit.mismatch_count}")
    for bits, labels in sorted(audit.collisions.items()):
        syndrome = "(" + ",".join(f"{b:+d}" for b in bits) + ")"
        lines.append(f"collision {syndrome}: {' '.join(labels)}")
    if audit.trivial_syndrome_errors:
        lines.append(
            "trivial computed syndrome: " + " ".join(audit.trivial_syndrome_errors)
        )
    for code_id in CODE_IDS:
        lines.extend(_codeword_report_lines(code_id))
    lines.append(_audit_summary_line())
    _emit("\n".join(lines) + "\n", config.output_path)
    return 0


def _cmd_syndrome_table(config: RunConfig) -> int:
    code = get_code(config.parameters["code"])
    table = build_syndrome_table(code)
    reference_rows = None
    if code.code_id == "paper5":
        reference_rows = {
            row.error_label: row.match for row in audit_against_paper(table).rows
        }
    g = table.generator_count
    if config.parameters["format"] == "csv":
        header = "error_label,phase," + ",".join(f"s{i + 1}" for i in range(g))
        if reference_rows is not None:
            header += ",matches_paper"
        lines = [header]
        for row in table.rows:
            cells = [row.error_label, quat.phase_label(row.phase)]
            cells += [f"{b:+d}" for b in row.syndrome.bits]
            if reference_rows is not None:
                cells.append("yes" if reference_rows[row.error_label] else "no")
            lines.append(",".join(cells))
    else:
        lines = [f"syndrome table [{code.code_id}] ({g} generators)"]
        for row in table.rows:
            extra = ""
            if reference_rows is not None:
                extra = "  matches_paper=" + ("yes" if reference_rows[row.error_label] else "no")
            lines.append(
                f"  {row.error_label:>3} ({'/'.join(row.variants)}): {row.syndrome}{extra}"
            )
    _emit("\n".join(lines) + "\n", config.output_path)
    return 0


def _cmd_mc(config: RunConfig) -> int:
    params = config.parameters
    sweep = SweepConfig(
        code_id=params["code"],
        noise=params["noise"],
        p_values=params["p_values"],
        trials=params["trials"],
        seed=params["seed"],
        quaternionic_detection=params["detect"],
        detection_threshold=params["threshold"],
    )
    result = run_sweep(sweep)
    _emit(sweep_csv(result), config.output_path)
    return 0


def _cmd_fit(config: RunConfig) -> int:
    try:
        with open(config.parameters["input"], "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read input CSV: {exc}") from None
    try:
        result = parse_sweep_csv(text)
        fit = fit_threshold(result)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    _emit(fit_json(fit) + "\n", config.output_path)
    return 0


def _cmd_figure1(config: RunConfig) -> int:
    params = config.parameters
    noise = NoiseModel(
        p=0.0,
        p_rot=params["rotations"],
        rot_axis=params["rot_axis"],
        rot_angle=params["rot_angle"],
    )
    base = dict(
        code_id=params["code"],
        noise=noise,
        p_values=params["p_values"],
        trials=params["trials"],
        seed=params["seed"],
        detection_threshold=params["threshold"],
    )
    data = figure1_data(
        SweepConfig(quaternionic_detection=False, **base),
        SweepConfig(quaternionic_detection=True, **base),
    )
    prefix = config.output_path
    csv_path = f"{prefix}.csv"
    json_path = f"{prefix}_fit.json"
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(figure1_csv(data, include_model_curves=params["include_model"]))
    with open(json_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(figure1_fits_json(data) + "\n")
    sys.stdout.write(f"wrote {csv_path}\nwrote {json_path}\n")
    return 0


def _cmd_report(config: RunConfig) -> int:
    lines = ["state and gate benchmark", "-" * 40]
    lines.append(f"bell state: {bell_prepare().render()}")
    lines.extend(_gate_audit_lines())
    lines.append("note: the conditional-flip operation is non-linear and therefore "
                 "excluded from the unitary audit")
    lines.append("")
    lines.append("codes")
    lines.append("-" * 40)
    for code_id in CODE_IDS:
        code = get_code(code_id)
        words = " ".join(g.word() for g in code.generators)
        lines.append(f"{code_id}: [[{code.n},{code.k},{code.d}]] generators: {words}")
        lines.extend(_codeword_report_lines(code_id))
    lines.append("")
    lines.append("published syndrome table audit [paper5]")
    lines.append("-" * 40)
    audit = audit_against_paper(build_syndrome_table(get_code("paper5")))
    lines.append(f"mismatch count: {audit.mismatch_count} of {len(audit.rows)} rows")
    for bits, labels in sorted(audit.collisions.items()):
        syndrome = "(" + ",".join(f"{b:+d}" for b in bits) + ")"
        lines.append(f"collision {syndrome}: {' '.join(labels)}")
    lines.append("")
    lines.append("codeword slot action vs published rows")
    lines.append("-" * 40)
    for name, mapping in (("table-implied", MAPPING_TABLE), ("prose", MAPPING_TEXT)):
        _, matches = codeword_action_diff(mapping)
        lines.append(f"mapping {name}: {matches}/6 rows match the published table")
    lines.append("")
    lines.append(_audit_summary_line())
    _emit("\n".join(lines) + "\n", config.output_path)
    return 0


_DISPATCH = {
    "bell": _cmd_bell,
    "verify": _cmd_verify,
    "audit": _cmd_audit,
    "syndrome-table": _cmd_syndrome_table,
    "mc": _cmd_mc,
    "fit": _cmd_fit,
    "figure1": _cmd_figure1,
    "report": _cmd_report,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed configuration; returns the process exit code."""
    return _DISPATCH[config.command](config)


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_args(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    try:
        return run(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # internal failure -> exit 1
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
