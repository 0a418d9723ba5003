"""Command-line front end: ``respoly <command> [flags]``.

Output is JSON on stdout (indented with ``--pretty``); diagnostics go to
stderr. Exit status: 0 success, 1 negative verdict, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from respoly import gallery
from respoly.builder import (
    POLICIES,
    BuildConfig,
    BuildTrace,
    FuelExhausted,
    build_residual_transducer,
    validate_residual_transducer,
)
from respoly.fo import FormulaSyntaxError
from respoly.resorder import FLAVORS, MEMBERSHIP, OracleUnavailable, OrderCtx, aperiodicity_probe, derivative, wqo_probe
from respoly.transducer import (
    eval_closed,
    find_counter,
    is_counter_free,
    to_dot,
    transducer_from_json,
    transducer_to_json,
)
from respoly.words import AlphabetMismatch
from respoly.zseries import Counting, NonIntegerValue, UnsupportedVariant, evaluate, series_from_json, series_to_json

COMMANDS = (
    "eval",
    "derive",
    "build",
    "validate",
    "check",
    "counter-free",
    "probe-wqo",
    "probe-aperiodic",
    "count",
    "export-dot",
    "gallery",
)


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", metavar="FILE")
    common.add_argument("--k", type=int)
    common.add_argument("--fuel", type=int, default=10_000)
    common.add_argument("--max-states", type=int, default=1024)
    common.add_argument("--policy", choices=POLICIES, default="shortlex")
    common.add_argument("--word")
    common.add_argument("--u")
    common.add_argument("--v")
    common.add_argument("--class", dest="cls", choices=FLAVORS)
    common.add_argument("--mode", choices=("prefix-chain", "full"), default="prefix-chain")
    common.add_argument("--max-len", type=int, default=20)
    common.add_argument("--n-max", type=int, default=20)
    common.add_argument("--dot", metavar="FILE")
    common.add_argument("--trace", metavar="FILE")
    common.add_argument("--pretty", action="store_true")

    parser = argparse.ArgumentParser(prog="respoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "gallery":
            p.add_argument("name", nargs="?")
    return parser


def _need(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.command} needs --{name.replace('_', '-')}")


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from None


def _load_series(args):
    _need(args, "input")
    return series_from_json(_read_json(args.input))


def _emit(obj, args) -> None:
    if args.pretty:
        print(json.dumps(obj, indent=2, ensure_ascii=False))
    else:
        print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_eval(args) -> int:
    _need(args, "input", "word")
    obj = _read_json(args.input)
    if "states" in obj:
        value = eval_closed(transducer_from_json(obj), args.word)
    else:
        value = evaluate(series_from_json(obj), args.word)
    _emit({"word": args.word, "value": value}, args)
    return 0


def cmd_count(args) -> int:
    s = _load_series(args)
    _need(args, "word")
    if not isinstance(s, Counting):
        raise UsageError("count needs a counting spec (kind 'counting')")
    _emit({"word": args.word, "formula": str(s.formula), "vars": list(s.variables), "count": evaluate(s, args.word)}, args)
    return 0


def cmd_derive(args) -> int:
    f = _load_series(args)
    _need(args, "u", "v")
    g = derivative(f, args.u, args.v)
    sample = [{"word": w, "value": evaluate(g, w)} for w in f.alphabet.words(3 if not f.alphabet.is_unary else 8)]
    _emit({"u": args.u, "v": args.v, "derivative": series_to_json(g), "values": sample}, args)
    return 0


def cmd_build(args) -> int:
    f = _load_series(args)
    _need(args, "k")
    cfg = BuildConfig(args.k, args.fuel, args.max_states, args.policy)
    trace = BuildTrace()
    try:
        t = build_residual_transducer(f, cfg, trace)
    except FuelExhausted as e:
        print(f"respoly: {e}", file=sys.stderr)
        if args.trace:
            _write(args.trace, json.dumps(trace.to_json(), ensure_ascii=False))
        _emit({"result": "fuel-exhausted", "message": str(e), "oracle_calls": trace.oracle_calls}, args)
        return 1
    if args.trace:
        _write(args.trace, json.dumps(trace.to_json(), ensure_ascii=False))
    if args.dot:
        _write(args.dot, to_dot(t))
    out = transducer_to_json(t)
    out["function"] = series_to_json(f)
    out["k"] = args.k
    _emit(out, args)
    return 0


def cmd_validate(args) -> int:
    _need(args, "input")
    obj = _read_json(args.input)
    if "function" not in obj:
        raise UsageError("validate needs a transducer file carrying its \"function\" (as written by build)")
    k = args.k if args.k is not None else obj.get("k")
    if k is None:
        raise UsageError("validate needs --k (or a \"k\" field in the input)")
    f = series_from_json(obj["function"])
    result = validate_residual_transducer(f, int(k), transducer_from_json(obj))
    _emit(result.to_json(), args)
    return 0 if result.ok else 1


def cmd_check(args) -> int:
    g = _load_series(args)
    _need(args, "cls", "k")
    member = MEMBERSHIP[args.cls](g, args.k)
    _emit({"class": args.cls, "k": args.k, "member": member}, args)
    return 0 if member else 1


def cmd_counter_free(args) -> int:
    _need(args, "input")
    t = transducer_from_json(_read_json(args.input))
    free = is_counter_free(t)
    counter = find_counter(t)
    _emit({"counter_free": free, "counter": list(counter) if counter else None}, args)
    return 0 if free else 1


def cmd_probe_wqo(args) -> int:
    f = _load_series(args)
    _need(args, "k")
    report = wqo_probe(OrderCtx(f, args.k, args.cls or "npoly"), args.mode, args.max_len)
    _emit(report.to_json(), args)
    return 1 if report.verdict == "bad-chain" else 0


def cmd_probe_aperiodic(args) -> int:
    f = _load_series(args)
    _need(args, "k", "word")
    report = aperiodicity_probe(OrderCtx(f, args.k, "nsf"), args.u or "", args.word, args.n_max)
    _emit(report.to_json(), args)
    return 0 if report.threshold is not None else 1


def cmd_export_dot(args) -> int:
    _need(args, "input")
    text = to_dot(transducer_from_json(_read_json(args.input)))
    if args.dot:
        _write(args.dot, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_gallery(args) -> int:
    if args.name is None:
        _emit([{"name": e.name, "description": e.description} for e in gallery.all_entries()], args)
    else:
        _emit(gallery.load(args.name).raw, args)
    return 0


HANDLERS = {
    "eval": cmd_eval,
    "derive": cmd_derive,
    "build": cmd_build,
    "validate": cmd_validate,
    "check": cmd_check,
    "counter-free": cmd_counter_free,
    "probe-wqo": cmd_probe_wqo,
    "probe-aperiodic": cmd_probe_aperiodic,
    "count": cmd_count,
    "export-dot": cmd_export_dot,
    "gallery": cmd_gallery,
}


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return HANDLERS[args.command](args)
    except OracleUnavailable as e:
        print(f"respoly: oracle unavailable: {e}", file=sys.stderr)
        return 2
    except (UsageError, gallery.GalleryError, FormulaSyntaxError, AlphabetMismatch, UnsupportedVariant, NonIntegerValue) as e:
        print(f"respoly: {e}", file=sys.stderr)
        return 2
    except (KeyError, TypeError, ValueError) as e:
        print(f"respoly: malformed input: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
