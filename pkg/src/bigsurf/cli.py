"""Command-line interface.

Subcommands: classify, check, roots, zariski, enumerate, witness, sweep.
Configurations arrive as JSON (inline via --json or from a file via
--input) with a "model" discriminator; reports leave as JSON, DOT (roots
only) or plain text.  Exit status: 0 on success, 1 when the input is
outside the supported domain, 2 when an internal cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import serialize as ser
from .bigness import (agreement_sweep, classify_anticanonical, cross_check,
                      orthogonal_complement)
from .enumeration import negative_classes
from .errors import DomainError
from .picard import (Generic, LineConic, PointConfiguration, ThreeLines,
                     blowup_p2, verify_witness)
from .roots import (classify as classify_roots, coxeter_dot, extract_roots,
                    predicted_type, root_lattice_of_config, type_string)
from .zariski import FamilyParams, zariski_decompose

__all__ = ["config_from_dict", "parse_config", "main", "run"]

_MODELS = ("generic", "line_conic", "three_lines", "hirzebruch_family")


def _check_fields(data: dict[str, Any], where: str,
                  required: tuple[str, ...],
                  optional: tuple[str, ...] = ()) -> None:
    for key in required:
        if key not in data:
            raise DomainError(f"missing field: {where}.{key}")
    for key in data:
        if key == "model":
            continue
        if key not in required and key not in optional:
            raise DomainError(f"unknown field: {where}.{key}")


def _int_field(data: dict[str, Any], where: str, key: str) -> int:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"field {where}.{key} must be an integer")
    return value


def _int_list_field(data: dict[str, Any], where: str, key: str,
                    length: int | None = None) -> list[int]:
    value = data[key]
    if (not isinstance(value, list)
            or any(isinstance(v, bool) or not isinstance(v, int) for v in value)):
        raise DomainError(f"field {where}.{key} must be a list of integers")
    if length is not None and len(value) != length:
        raise DomainError(f"field {where}.{key} must list exactly {length} entries")
    return value


def config_from_dict(data: Any) -> PointConfiguration | FamilyParams:
    if not isinstance(data, dict):
        raise DomainError("configuration must be a JSON object")
    model = data.get("model")
    if model is None:
        raise DomainError("missing field: model")
    if model == "generic":
        _check_fields(data, "generic", ("r",))
        return Generic(_int_field(data, "generic", "r"))
    if model == "line_conic":
        _check_fields(data, "line_conic", ("a", "b"), ("both",))
        both = _int_field(data, "line_conic", "both") if "both" in data else 0
        return LineConic(_int_field(data, "line_conic", "a"),
                         _int_field(data, "line_conic", "b"), both)
    if model == "three_lines":
        _check_fields(data, "three_lines", ("a",), ("intersections",))
        a = _int_list_field(data, "three_lines", "a", 3)
        flags = data.get("intersections", [False, False, False])
        if (not isinstance(flags, list) or len(flags) != 3
                or any(not isinstance(f, bool) for f in flags)):
            raise DomainError(
                "field three_lines.intersections must list exactly 3 booleans")
        return ThreeLines(a[0], a[1], a[2],
                          p12=flags[0], p13=flags[1], p23=flags[2])
    if model == "hirzebruch_family":
        _check_fields(data, "hirzebruch_family", ("n", "k", "a"))
        return FamilyParams(_int_field(data, "hirzebruch_family", "n"),
                            _int_field(data, "hirzebruch_family", "k"),
                            tuple(_int_list_field(data, "hirzebruch_family", "a")))
    raise DomainError(
        f"unknown model: {model!r} (expected one of {', '.join(_MODELS)})")


def parse_config(text: str) -> PointConfiguration | FamilyParams:
    return config_from_dict(_load_json(text))


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DomainError(
            f"malformed JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc


def _witness_args(data: Any) -> dict[str, Any]:
    if not isinstance(data, dict):
        raise DomainError("witness request must be a JSON object")
    _check_fields(data, "witness", ("example",),
                  ("n", "fibers", "extra_on_sigma"))
    example = data["example"]
    if not isinstance(example, str):
        raise DomainError("field witness.example must be a string")
    kwargs: dict[str, Any] = {"example": example}
    if "n" in data:
        kwargs["n"] = _int_field(data, "witness", "n")
    if "fibers" in data:
        fibers = data["fibers"]
        if (not isinstance(fibers, list)
                or any(not isinstance(f, list) or len(f) != 2
                       or isinstance(f[0], bool) or not isinstance(f[0], int)
                       or not isinstance(f[1], bool) for f in fibers)):
            raise DomainError(
                "field witness.fibers must list [count, on_section] pairs")
        kwargs["fibers"] = [tuple(f) for f in fibers]
    if "extra_on_sigma" in data:
        kwargs["extra_on_sigma"] = _int_field(data, "witness", "extra_on_sigma")
    return kwargs


def _point_config(parsed: PointConfiguration | FamilyParams,
                  command: str) -> PointConfiguration:
    if isinstance(parsed, FamilyParams):
        raise DomainError(f"{command} expects a point configuration, "
                          "not hirzebruch_family parameters")
    return parsed


def _type_label(config: PointConfiguration) -> str | None:
    if isinstance(config, Generic):
        return None
    components = predicted_type(config)
    return None if components is None else type_string(components)


def _run_classify(config: PointConfiguration) -> tuple[dict[str, Any], int]:
    verdict = classify_anticanonical(config)
    data = ser.verdict_to_dict(verdict)
    # "lattice" reports the lattice-side verdict of the check command; a
    # plain classify never runs that computation, so the key is left out.
    del data["lattice"]
    effective = data.pop("effective")
    data["type"] = _type_label(config)
    data["effective"] = effective
    return data, 0


def _run_check(config: PointConfiguration) -> tuple[dict[str, Any], int]:
    report = cross_check(config)
    flat = ser.cross_check_to_dict(report)
    data: dict[str, Any] = {}
    for key, value in flat.items():
        data[key] = value
        if key == "lattice":
            data["type"] = _type_label(config)
    if report.ok:
        return data, 0
    print("error: lattice verdict disagrees with the closed-form criterion",
          file=sys.stderr)
    return data, 2


def _run_roots(config: PointConfiguration,
               fmt: str) -> tuple[dict[str, Any] | str, int]:
    if isinstance(config, Generic):
        lattice = blowup_p2(config.r)
        basis, gram = orthogonal_complement(lattice, [lattice.anticanonical])
    else:
        basis, gram = root_lattice_of_config(config)
    report = classify_roots(extract_roots(gram), gram)
    if fmt == "dot":
        return coxeter_dot(report), 0
    tail = ser.root_report_to_dict(report)
    data = {
        "type": type_string(report.components),
        "root_count": len(report.roots),
        "components": tail["components"],
        "basis": [list(v) for v in basis],
        "simple_roots": tail["simple_roots"],
        "cartan": tail["cartan"],
        "graph": tail["graph"],
        "roots": tail["roots"],
    }
    return data, 0


def _run_zariski(params: FamilyParams) -> tuple[dict[str, Any], int]:
    report = zariski_decompose(params)
    data = ser.zariski_report_to_dict(report)
    if report.checks.all_pass:
        return data, 0
    failed = [name for name, value in data["checks"].items() if not value]
    print(f"error: decomposition checks failed: {', '.join(failed)}",
          file=sys.stderr)
    return data, 2


def _run_enumerate(config: PointConfiguration) -> tuple[dict[str, Any], int]:
    if not isinstance(config, Generic):
        raise DomainError("enumerate expects a generic configuration "
                          '({"model":"generic","r":...})')
    return ser.class_table_to_dict(negative_classes(config.r)), 0


def _run_sweep(max_a: int, max_b: int, max_ai: int) -> tuple[dict[str, Any], int]:
    report = agreement_sweep(max_a, max_b, max_ai)
    data = ser.sweep_to_dict(report)
    if report.clean:
        return data, 0
    print("error: cross-validation sweep found disagreements", file=sys.stderr)
    return data, 2


def _scalar_text(value: Any) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, str)):
        return str(value)
    return json.dumps(value, separators=(",", ":"))


def _render_text(data: dict[str, Any]) -> str:
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {_scalar_text(v)}" for k, v in value.items())
        else:
            lines.append(f"{key}: {_scalar_text(value)}")
    return "\n".join(lines) + "\n"


def _emit(payload: dict[str, Any] | str, fmt: str, out: str | None) -> None:
    if isinstance(payload, str):
        text = payload
    elif fmt == "text":
        text = _render_text(payload)
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _read_input(args: argparse.Namespace) -> str:
    if args.json is not None:
        return args.json
    try:
        return Path(args.input).read_text(encoding="utf-8")
    except OSError as exc:
        raise DomainError(f"cannot read {args.input}: {exc.strerror}") from exc


def _add_io_arguments(parser: argparse.ArgumentParser,
                      formats: tuple[str, ...]) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--input", metavar="FILE",
                        help="read the JSON request from FILE")
    source.add_argument("--json", metavar="TEXT",
                        help="inline JSON request")
    parser.add_argument("--format", choices=formats, default="json",
                        help="output format (default: json)")
    parser.add_argument("--out", metavar="FILE",
                        help="write the report to FILE instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bigsurf",
        description="Exact bigness tests, root systems and Zariski "
                    "decompositions for rational surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    simple = {
        "classify": "decide bigness of the anticanonical class",
        "check": "cross-validate the closed-form verdict against the lattice",
        "zariski": "decompose the anticanonical class of a family member",
        "enumerate": "list minus-one classes and roots of a del Pezzo lattice",
        "witness": "verify a stored effective-decomposition identity",
    }
    for name, help_text in simple.items():
        _add_io_arguments(sub.add_parser(name, help=help_text),
                          ("json", "text"))
    _add_io_arguments(
        sub.add_parser("roots",
                       help="extract and classify the root system orthogonal "
                            "to the anticanonical components"),
        ("json", "dot", "text"))

    sweep = sub.add_parser("sweep", help="run the full cross-validation sweep")
    sweep.add_argument("--max-a", type=int, default=12, metavar="N",
                       help="bound on points per line (default: 12)")
    sweep.add_argument("--max-b", type=int, default=12, metavar="N",
                       help="bound on points per conic (default: 12)")
    sweep.add_argument("--max-ai", type=int, default=10, metavar="N",
                       help="bound on points per line, three-line models "
                            "(default: 10)")
    sweep.add_argument("--format", choices=("json", "text"), default="json")
    sweep.add_argument("--out", metavar="FILE")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; exit 2 is reserved for internal
        # invariant failures, so fold usage problems into the domain-error
        # status (--help still exits 0).
        return 1 if exc.code else 0
    try:
        if args.command == "sweep":
            payload, code = _run_sweep(args.max_a, args.max_b, args.max_ai)
        elif args.command == "witness":
            payload, code = (
                ser.witness_to_dict(verify_witness(
                    **_witness_args(_load_json(_read_input(args))))), 0)
        else:
            parsed = parse_config(_read_input(args))
            if args.command == "classify":
                payload, code = _run_classify(_point_config(parsed, "classify"))
            elif args.command == "check":
                payload, code = _run_check(_point_config(parsed, "check"))
            elif args.command == "roots":
                payload, code = _run_roots(_point_config(parsed, "roots"),
                                           args.format)
            elif args.command == "zariski":
                if not isinstance(parsed, FamilyParams):
                    raise DomainError(
                        "zariski expects hirzebruch_family parameters")
                payload, code = _run_zariski(parsed)
            else:
                payload, code = _run_enumerate(_point_config(parsed, "enumerate"))
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except RuntimeError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    _emit(payload, args.format, args.out)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
