"""Command-line interface: ``qecc-advisor <subcommand> ...``.

Exit codes: 0 success (an empty recommendation list included), 2 invalid
input, 3 registry/schema error, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import benchdata, stabverify
from .recommender import (
    ErrorWeights,
    InternalConsistencyError,
    Scenario,
    ScoreWeights,
    recommend,
)
from .registry import (
    BUILTIN,
    DomainError,
    RegistryError,
    load_registry,
    max_distance,
    registry_to_dict,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REGISTRY = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def _probability(text: str) -> float:
    value = float(text)
    if not (0.0 <= value < 1.0):
        raise argparse.ArgumentTypeError(f"must lie in [0, 1), got {text}")
    return value


def _yes_no(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("yes", "y", "true", "1"):
        return True
    if lowered in ("no", "n", "false", "0"):
        return False
    raise argparse.ArgumentTypeError(f"expected yes or no, got {text}")


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t]


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--registry", default=default if suppress else BUILTIN, help="registry JSON (default: built-in)")
    parser.add_argument("--format", choices=("text", "json", "csv"), default=default if suppress else "text")
    parser.add_argument("--debug", action="store_true", default=default if suppress else False)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qecc-advisor", description="Benchmark-driven selection of quantum error-correction codes.")
    _global_options(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("recommend", parents=[common], help="rank codes for a scenario")
    p.add_argument("--qtype", required=True, help="qubit technology or 'simulation'")
    p.add_argument("--max-qavail", type=_positive_int, required=True)
    p.add_argument("--qorig", type=_positive_int, required=True)
    p.add_argument("--multi-qgate", type=_yes_no, required=True)
    p.add_argument("--err-type", choices=("bit-flip", "phase-flip", "all-pauli"), required=True)
    p.add_argument("--dep-err", type=_probability, required=True)
    p.add_argument("--gate-err", type=_probability, required=True)
    p.add_argument("--read-err", type=_probability, required=True)
    p.add_argument("--top", type=_nonneg_int)
    p.add_argument("--weights", help="JSON file with 'error_weights' and/or 'score_weights'")

    p = sub.add_parser("max-distance", parents=[common], help="largest distance within a qubit budget")
    p.add_argument("--code", required=True)
    p.add_argument("--budget", type=_nonneg_int, required=True)
    p.add_argument("--qorig", type=_positive_int, default=1)

    sub.add_parser("list-codes", parents=[common], help="list registry codes")
    p = sub.add_parser("show-code", parents=[common], help="print one registry record")
    p.add_argument("code")
    p = sub.add_parser("validate-registry", parents=[common], help="validate a registry file")
    p.add_argument("path")

    p = sub.add_parser("verify", parents=[common], help="brute-force check a stabilizer code claim")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", choices=sorted(stabverify.builtin_codes()))
    src.add_argument("--code-file")
    p.add_argument("--claim", choices=("distance", "correctable", "generators"), default="distance")
    p.add_argument("--wmax", type=_positive_int, default=3)
    p.add_argument("--t", type=_positive_int, default=1)
    p.add_argument("--restrict", choices=[r.value for r in stabverify.Restrict], default="all")
    p.add_argument("--cap", type=_positive_int, default=stabverify.DEFAULT_CAP)

    p = sub.add_parser("export-bench", parents=[common], help="export benchmark datasets")
    p.add_argument("dataset", choices=("overhead", "thresholds", "radar", "ler", "required-distance"))
    p.add_argument("--codes", help="comma-separated code ids (overhead; default all)")
    p.add_argument("--d-min", type=_positive_int, default=2)
    p.add_argument("--d-max", type=_positive_int, default=11)
    p.add_argument("--p-th", type=float, default=0.018)
    p.add_argument("--prefactor", type=float, default=0.1)
    p.add_argument("--p-values", type=_float_list, default=[1e-4, 3e-4, 1e-3, 3e-3, 1e-2])
    p.add_argument("--distances", default="3,5,7,9")
    p.add_argument("--targets", type=_float_list, default=[1e-6, 1e-9, 1e-12, 1e-15])
    return parser


def _load_weights(path: Optional[str]) -> tuple[ErrorWeights, ScoreWeights]:
    if not path:
        return ErrorWeights(), ScoreWeights()
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    return ErrorWeights(**doc.get("error_weights", {})), ScoreWeights(**doc.get("score_weights", {}))


def _emit_json(out, obj) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _cmd_recommend(args, registry, out, err) -> int:
    scenario = Scenario(
        q_type=args.qtype,
        max_q_avail=args.max_qavail,
        q_orig=args.qorig,
        multi_q_gate=args.multi_qgate,
        err_type=args.err_type,
        dep_err=args.dep_err,
        gate_err=args.gate_err,
        read_err=args.read_err,
    )
    err_weights, score_weights = _load_weights(args.weights)
    result = recommend(scenario, registry, err_weights=err_weights, score_weights=score_weights, top_n=args.top)
    if args.format == "json":
        doc = result.to_dict()
        if not args.debug:
            doc.pop("trace")
        _emit_json(out, doc)
        return EXIT_OK
    if args.format == "csv":
        out.write("id,max_distance,score\n")
        for rec in result:
            out.write(f"{rec.code},{rec.max_distance},{rec.score!r}\n")
    else:
        if args.debug:
            for entry in result.trace:
                out.write(f"# {entry}\n")
        for rec in result:
            out.write(f"{registry.get(rec.code).display_name} {rec.max_distance}\n")
        if not len(result):
            err.write("no code survives filtration (rerun with --debug for the trace)\n")
    return EXIT_OK


def _cmd_max_distance(args, registry, out, err) -> int:
    code = registry.get(args.code)
    result = max_distance(code, args.budget, args.qorig)
    if args.format == "json":
        _emit_json(out, {"code": code.id, "budget": args.budget, "qorig": args.qorig, "max_distance": result.to_json()})
    else:
        out.write(f"{result}\n")
    return EXIT_OK


def _cmd_list_codes(args, registry, out, err) -> int:
    if args.format == "json":
        _emit_json(out, [{"id": c.id, "display_name": c.display_name} for c in registry])
    elif args.format == "csv":
        out.write("id,display_name,overhead,threshold\n")
        for c in registry:
            out.write(f"{c.id},{c.display_name},{c.overhead},{c.threshold!r}\n")
    else:
        for c in registry:
            out.write(f"{c.id:<14} {c.display_name:<10} n={c.overhead}  k={c.k}  threshold={c.threshold:g}\n")
    return EXIT_OK


def _cmd_show_code(args, registry, out, err) -> int:
    code = registry.get(args.code)
    record = next(r for r in registry_to_dict(registry)["codes"] if r["id"] == code.id)
    if args.format == "json":
        _emit_json(out, record)
    else:
        for key, value in record.items():
            out.write(f"{key}: {json.dumps(value)}\n")
    return EXIT_OK


def _cmd_validate(args, registry, out, err) -> int:
    reg = load_registry(args.path)
    if args.format == "json":
        _emit_json(out, {"valid": True, "codes": len(reg)})
    else:
        out.write(f"ok: {len(reg)} codes\n")
    return EXIT_OK


def _cmd_verify(args, registry, out, err) -> int:
    if args.code:
        code = stabverify.builtin_codes()[args.code]
    else:
        code = stabverify.load_code(args.code_file)
    restrict = stabverify.Restrict(args.restrict)
    if args.claim == "distance":
        res = stabverify.min_distance(code, args.wmax, restrict, args.cap)
        report = {
            "claim": f"distance (restrict={restrict.value}, wmax={args.wmax})",
            "result": res.distance if res.found else f">{res.w_max}",
            "witness": None if res.witness is None else str(res.witness),
            "examined": res.examined,
        }
        text = str(res)
    elif args.claim == "correctable":
        rep = stabverify.check_correctability(code, args.t, restrict, args.cap)
        report = rep.to_dict()
        text = f"corrects {args.t}: {'yes' if rep.correctable else 'no'}"
        if rep.witness is not None:
            text += f" (witness {rep.witness})"
    else:
        # generator validity is enforced when the code is built
        report = {"claim": "generators commute and are independent", "result": True, "witness": None,
                  "examined": code.num_generators}
        text = f"{code.num_generators} generators on {code.n} qubits: commuting, independent"
    if args.format == "json":
        _emit_json(out, dict(report, code=code.name))
    else:
        out.write(text + "\n")
    return EXIT_OK


def _cmd_export(args, registry, out, err) -> int:
    model = benchdata.LERModel(args.p_th, args.prefactor)
    if args.dataset == "overhead":
        ids = args.codes.split(",") if args.codes else registry.ids
        data = benchdata.overhead_series(registry, ids, range(args.d_min, args.d_max + 1))
    elif args.dataset == "thresholds":
        data = benchdata.threshold_series(registry)
    elif args.dataset == "radar":
        data = benchdata.radar_data(registry)
    elif args.dataset == "ler":
        data = benchdata.ler_series(model, args.p_values, [int(d) for d in args.distances.split(",")])
    else:
        data = benchdata.required_distance_series(model, args.p_values, args.targets)
    benchdata.export(data, "json" if args.format == "json" else "csv", out)
    return EXIT_OK


_COMMANDS = {
    "recommend": _cmd_recommend,
    "max-distance": _cmd_max_distance,
    "list-codes": _cmd_list_codes,
    "show-code": _cmd_show_code,
    "validate-registry": _cmd_validate,
    "verify": _cmd_verify,
    "export-bench": _cmd_export,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    try:
        registry = load_registry(args.registry)
        return _COMMANDS[args.command](args, registry, out, err)
    except RegistryError as exc:
        err.write(f"registry error: {exc}\n")
        return EXIT_REGISTRY
    except InternalConsistencyError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (KeyError, ValueError, DomainError, OSError, stabverify.EnumerationLimitError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"{parser.format_usage()}error: {message}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
