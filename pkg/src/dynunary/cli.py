"""Command-line interface.

Every subcommand prints human-readable text by default; --records switches
to one JSON object per line with the same content.  Exit codes: 0 on
success, 2 for usage or malformed input, 3 when a resource budget or orbit
bound is exceeded.
"""

from __future__ import annotations

import argparse
import json
import string
import sys

from . import altcodec, cycles
from ._backend import BACKEND
from .bitstring import BitString
from .codec import Direction, iterate
from .cycle_on import Generator, cycle_on, recover_origin
from .errors import BudgetExceededError, OrbitBoundError

DEFAULT_MAX_BYTES = 64 * 1024 * 1024


def _parse_bits(text: str) -> BitString:
    return BitString.from_text(text.strip())


def _parse_hex(text: str) -> BitString:
    t = text.strip().lower()
    if t.startswith("0x"):
        t = t[2:]
    if not t or set(t) - set(string.hexdigits.lower()):
        raise ValueError(f"invalid hex string {text!r}")
    return BitString(int(t, 16), 4 * len(t))


def _read_string(args) -> BitString:
    if args.form == "hex":
        return _parse_hex(args.inp)
    return _parse_bits(args.inp)


def _format_string(s: BitString, form: str) -> str:
    if form == "hex":
        if s.length % 4:
            raise ValueError(f"length {s.length} is not a whole number of hex digits")
        return format(s.value, f"0{s.length // 4}x")
    return s.to_text()


def _read_file_bits(path: str, max_bytes: int) -> BitString:
    with open(path, "rb") as fh:
        data = fh.read(max_bytes + 1)
    if len(data) > max_bytes:
        raise BudgetExceededError(
            f"input file exceeds the byte budget of {max_bytes}; "
            f"raise --max-bytes to proceed"
        )
    return BitString.from_bytes(data)


def _direction(args) -> Direction:
    return Direction(args.dir)


def _parse_gens(args, n: int) -> list[Generator]:
    direction = _direction(args)
    gens = []
    for tok in args.gens.split(","):
        tok = tok.strip()
        if not tok:
            continue
        gens.append(
            Generator(BitString(int(tok), n), args.pref, direction)
        )
    return gens


def _emit(args, record: dict, text: str) -> int:
    if args.records:
        print(json.dumps(record))
    else:
        print(text)
    return 0


def _cmd_transform(args, direction: Direction) -> int:
    if args.form == "file":
        if not args.out:
            raise ValueError("--out is required with --form file")
        s = _read_file_bits(args.inp, DEFAULT_MAX_BYTES)
        result = iterate(s, args.pref, direction, args.steps)
        with open(args.out, "wb") as fh:
            fh.write(result.to_bytes())
        record = {
            "type": "transform",
            "dir": str(direction),
            "pref": args.pref,
            "steps": args.steps,
            "n": s.length,
            "in_path": args.inp,
            "out_path": args.out,
        }
        return _emit(args, record, f"wrote {s.length // 8} bytes to {args.out}")
    s = _read_string(args)
    result = iterate(s, args.pref, direction, args.steps)
    out = _format_string(result, args.form)
    record = {
        "type": "transform",
        "dir": str(direction),
        "pref": args.pref,
        "steps": args.steps,
        "n": s.length,
        "in": _format_string(s, args.form),
        "out": out,
    }
    return _emit(args, record, out)


def _cmd_encode(args) -> int:
    return _cmd_transform(args, Direction.ENCODE)


def _cmd_decode(args) -> int:
    return _cmd_transform(args, Direction.DECODE)


def _cmd_cycle(args) -> int:
    s = _read_string(args)
    direction = _direction(args)
    cyc = cycles.cycle_of(s, args.pref, direction)
    walk = cyc.rotated_to_last(s)
    values = [b.value for b in walk]
    record = {
        "type": "cycle",
        "n": s.length,
        "pref": args.pref,
        "dir": str(direction),
        "k": cyc.k,
        "elements": values,
    }
    text = (
        f"n={s.length} pref={args.pref} dir={direction} k={cyc.k}\n"
        "(" + " ".join(str(v) for v in values) + ")"
    )
    return _emit(args, record, text)


def _cmd_partition(args) -> int:
    direction = _direction(args)
    part = cycles.partition(args.n, args.pref, direction, args.budget)
    record = {
        "type": "partition",
        "n": args.n,
        "pref": args.pref,
        "dir": str(direction),
        "cycle_count": len(part),
        "cycles": [c.values() for c in part],
    }
    text = (
        f"n={args.n} pref={args.pref} dir={direction} cycle_count={len(part)}\n"
        + cycles.format_partition(part)
    )
    return _emit(args, record, text)


def _cmd_spectrum(args) -> int:
    predicted = cycles.predicted_spectrum(args.n, args.pref)
    record = {
        "type": "spectrum",
        "n": args.n,
        "pref": args.pref,
        "k": predicted.k,
        "count": predicted.count,
    }
    lines = [f"n={args.n} pref={args.pref} predicted k={predicted.k} count={predicted.count}"]
    if args.check:
        report = cycles.verify_spectrum(args.n, args.pref, _direction(args), args.budget)
        record.update(
            {
                "dir": str(report.direction),
                "observed_sizes": list(report.observed_sizes),
                "cycle_count": report.cycle_count,
                "ok": report.ok,
                "findings": list(report.findings),
                "notes": list(report.notes),
            }
        )
        sizes = ",".join(str(k) for k in report.observed_sizes)
        lines.append(
            f"observed sizes=[{sizes}] cycles={report.cycle_count} "
            f"ok={'yes' if report.ok else 'no'}"
        )
        lines.extend(f"finding: {f}" for f in report.findings)
        lines.extend(f"note: {m}" for m in report.notes)
    return _emit(args, record, "\n".join(lines))


def _cmd_sums(args) -> int:
    report = cycles.sum_identity_check(args.n, args.pref, args.budget)
    record = {
        "type": "sums",
        "n": args.n,
        "pref": args.pref,
        "sums": {str(k): v for k, v in report.sums.items()},
        "expected": report.expected,
        "ok": report.ok,
    }
    lines = [f"sum={k} cycles={v}" for k, v in report.sums.items()]
    if report.expected is not None:
        lines.append(
            f"expected={report.expected} ok={'yes' if report.ok else 'no'}"
        )
    return _emit(args, record, "\n".join(lines))


def _cmd_cycle_on(args) -> int:
    start = BitString(args.start, args.n)
    gens = _parse_gens(args, args.n)
    orbit = cycle_on(start, gens)
    values = orbit.values()
    record = {
        "type": "cycle-on",
        "n": args.n,
        "pref": args.pref,
        "dir": args.dir,
        "start": args.start,
        "generators": [g.seed.value for g in gens],
        "length": orbit.length,
        "elements": values,
    }
    text = (
        f"n={args.n} pref={args.pref} dir={args.dir} start={args.start} "
        f"generators={args.gens} length={orbit.length}\n"
        + " ".join(str(v) for v in values)
    )
    return _emit(args, record, text)


def _cmd_recover(args) -> int:
    element = BitString(args.element, args.n)
    gens = _parse_gens(args, args.n)
    origin = recover_origin(element, args.index, gens)
    record = {
        "type": "recover",
        "n": args.n,
        "pref": args.pref,
        "dir": args.dir,
        "element": args.element,
        "index": args.index,
        "origin": origin.value,
    }
    return _emit(args, record, f"origin={origin.value}")


def _cmd_dropt(args) -> int:
    if args.op == "cycles":
        if args.n is None:
            raise ValueError("--n is required for dropt cycles")
        part = altcodec.dropt_partition(args.n, args.terminus, args.budget)
        record = {
            "type": "dropt-partition",
            "n": args.n,
            "terminus": args.terminus,
            "cycle_count": len(part),
            "cycles": [[b.value for b in c] for c in part],
        }
        lines = [f"n={args.n} terminus={args.terminus} cycle_count={len(part)}"]
        lines.extend(
            "(" + " ".join(str(b.value) for b in c) + ")" for c in part
        )
        return _emit(args, record, "\n".join(lines))
    if args.inp is None:
        raise ValueError(f"--in is required for dropt {args.op}")
    s = _parse_bits(args.inp)
    if args.op == "encode":
        out = altcodec.dropt_encode(s, args.terminus)
    else:
        out = altcodec.dropt_decode(s, args.terminus)
    record = {
        "type": "dropt",
        "op": args.op,
        "terminus": args.terminus,
        "in": s.to_text(),
        "out": out.to_text(),
    }
    return _emit(args, record, out.to_text())


def _cmd_construct(args) -> int:
    s = _parse_bits(args.inp)
    out = altcodec.construct(s, args.anchor)
    record = {
        "type": "construct",
        "anchor": args.anchor,
        "in": s.to_text(),
        "out": out.to_text(),
    }
    return _emit(args, record, out.to_text())


def _cmd_deconstruct(args) -> int:
    s = _parse_bits(args.inp)
    out = altcodec.deconstruct(s, args.anchor)
    record = {
        "type": "deconstruct",
        "anchor": args.anchor,
        "in": s.to_text(),
        "out": out.to_text(),
    }
    return _emit(args, record, out.to_text())


def _cmd_file_transform(args) -> int:
    direction = _direction(args)
    s = _read_file_bits(args.inp, args.max_bytes)
    result = iterate(s, args.pref, direction, args.steps)
    with open(args.out, "wb") as fh:
        fh.write(result.to_bytes())
    record = {
        "type": "file-transform",
        "dir": str(direction),
        "pref": args.pref,
        "steps": args.steps,
        "n": s.length,
        "in_path": args.inp,
        "out_path": args.out,
    }
    return _emit(args, record, f"wrote {s.length // 8} bytes to {args.out}")


def _add_records(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--records", action="store_true", help="emit one JSON record per line"
    )


def _add_dir(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--dir", choices=["encode", "decode"], default="encode",
        help="transform direction (default encode)",
    )


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--budget", type=int, default=cycles.DEFAULT_BUDGET,
        help=f"largest length to enumerate (default {cycles.DEFAULT_BUDGET})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dynunary",
        description="Dynamic unary transforms, cycles, and XOR orbit tools "
        f"(kernel backend: {BACKEND})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, func in (("encode", _cmd_encode), ("decode", _cmd_decode)):
        p = sub.add_parser(name, help=f"{name} a string or file")
        p.add_argument("--in", dest="inp", required=True, help="input string or path")
        p.add_argument(
            "--form", choices=["bits", "hex", "file"], default="bits",
            help="input/output form (default bits)",
        )
        p.add_argument("--pref", type=int, default=0, help="parity reference position")
        p.add_argument("--steps", type=int, default=1, help="number of applications")
        p.add_argument("--out", help="output path (required for --form file)")
        _add_records(p)
        p.set_defaults(func=func)

    p = sub.add_parser("cycle", help="full transform cycle of one string")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--form", choices=["bits", "hex"], default="bits")
    p.add_argument("--pref", type=int, default=0)
    _add_dir(p)
    _add_records(p)
    p.set_defaults(func=_cmd_cycle)

    p = sub.add_parser("partition", help="all cycles over the strings of a length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pref", type=int, default=0)
    _add_dir(p)
    _add_budget(p)
    _add_records(p)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("spectrum", help="predicted cycle structure, optionally verified")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pref", type=int, default=0)
    p.add_argument("--check", action="store_true", help="enumerate and compare")
    _add_dir(p)
    _add_budget(p)
    _add_records(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("sums", help="cycle-sum census for one (n, pref)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pref", type=int, default=0)
    _add_budget(p)
    _add_records(p)
    p.set_defaults(func=_cmd_sums)

    p = sub.add_parser("cycle-on", help="combined orbit driven by generator cycles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--start", type=int, required=True, help="start value, decimal")
    p.add_argument(
        "--gens", default="", help="comma-separated generator seed values, decimal"
    )
    p.add_argument("--pref", type=int, default=0)
    _add_dir(p)
    _add_records(p)
    p.set_defaults(func=_cmd_cycle_on)

    p = sub.add_parser("recover", help="recover a combined orbit's start element")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--element", type=int, required=True, help="known element, decimal")
    p.add_argument("--index", type=int, required=True, help="its 1-based step number")
    p.add_argument("--gens", default="")
    p.add_argument("--pref", type=int, default=0)
    _add_dir(p)
    _add_records(p)
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("dropt", help="sample-and-drop codec")
    p.add_argument("op", choices=["encode", "decode", "cycles"])
    p.add_argument("--in", dest="inp", help="input bit string (encode/decode)")
    p.add_argument("--n", type=int, help="string length (cycles)")
    p.add_argument("--terminus", type=int, choices=[0, 1], required=True)
    _add_budget(p)
    _add_records(p)
    p.set_defaults(func=_cmd_dropt)

    p = sub.add_parser("construct", help="expand a string into two anchored halves")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--anchor", type=int, choices=[0, 1], default=0)
    _add_records(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("deconstruct", help="invert construct with consistency checks")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--anchor", type=int, choices=[0, 1], default=0)
    _add_records(p)
    p.set_defaults(func=_cmd_deconstruct)

    p = sub.add_parser("file-transform", help="transform a whole file as one string")
    p.add_argument("--in", dest="inp", required=True, help="input path")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--pref", type=int, default=0)
    p.add_argument("--steps", type=int, default=1)
    p.add_argument(
        "--max-bytes", type=int, default=DEFAULT_MAX_BYTES,
        help=f"input size budget in bytes (default {DEFAULT_MAX_BYTES})",
    )
    _add_dir(p)
    _add_records(p)
    p.set_defaults(func=_cmd_file_transform)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceededError, OrbitBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
