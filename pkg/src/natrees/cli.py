"""Command-line front end: ``natrees <subcommand> ...``.

Output is one JSON object per line unless ``--format`` selects ``csv`` or
``pretty``. Failures print a single ``natrees: error: ...`` line on stderr
and exit with status 2; ``verify`` and ``dk --validate`` exit with 1 when a
check fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from natrees import bijections as bj
from natrees import natdk as dk
from natrees import qhook as qh
from natrees import render
from natrees import series as sr
from natrees.nat import (
    BruteForceBudgetError,
    count_nats_hook,
    enumerate_nats_by_size,
    enumerate_nats_of_shape,
    nat_from_json,
    nat_stats,
    nat_to_json,
    validate_nat,
)
from natrees.perm import extract_sigma, statistic
from natrees.poly import QPoly2
from natrees.trees import TreeFormatError, format_tree, parse_tree

__all__ = ["main", "run", "build_parser"]


class CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # single-line diagnostics instead of usage dumps
        raise CliError(message)


# ---------------------------------------------------------------------------
# output helpers

def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _poly_json(p: QPoly2):
    return [[a, b, _num(c)] for a, b, c in p.to_triples()]


class _Out:
    def __init__(self, stream, fmt: str):
        self.stream = stream
        self.fmt = fmt

    def rows(self, records: Iterable[dict], pretty=None):
        records = list(records)
        if self.fmt == "json":
            for r in records:
                self.stream.write(json.dumps(r, separators=(",", ":")) + "\n")
        elif self.fmt == "csv":
            if not records:
                return
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            keys = list(records[0])
            writer.writerow(keys)
            for r in records:
                writer.writerow([_csv_cell(r.get(k)) for k in keys])
            self.stream.write(buf.getvalue())
        else:
            for r in records:
                self.stream.write((pretty(r) if pretty else _pretty(r)) + "\n")


def _csv_cell(v):
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    if v is None:
        return ""
    return v


def _pretty(r: dict) -> str:
    return "  ".join(f"{k}={v}" for k, v in r.items())


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"invalid JSON in {path}: {exc.msg} at line {exc.lineno}") from None


def _shape_arg(text: str):
    tree = parse_tree(text)
    if tree is None:
        raise CliError("the shape must be a non-empty tree")
    return tree


def _size_arg(text: str) -> tuple[int, int]:
    try:
        w, h = (int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"--size expects w,h (two non-negative integers), got {text!r}") from None
    if w < 0 or h < 0:
        raise CliError("--size entries must be non-negative")
    return w, h


def _non_negative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _number(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands

def _cmd_count(args, out: _Out) -> int:
    shape = _shape_arg(args.shape)
    rec = len(enumerate_nats_of_shape(shape, "recursive"))
    try:
        brute: Optional[int] = len(enumerate_nats_of_shape(shape, "brute_force"))
    except BruteForceBudgetError:
        brute = None
    hook = count_nats_hook(shape)
    ok = rec == hook and (brute is None or brute == hook)
    out.rows([{"shape": format_tree(shape), "hook": hook, "recursive": rec, "brute_force": brute, "agree": ok}])
    return 0 if ok else 1


def _nat_record(nat, stats: bool) -> dict:
    rec = nat_to_json(nat)
    rec["shape"] = format_tree(nat.shape)
    if stats:
        st = nat_stats(nat)
        sl, sr_ = extract_sigma(nat)
        rec.update({
            "lo": st.lo,
            "ro": st.ro,
            "hook_number": st.hook_number,
            "sigma_L": list(sl),
            "sigma_R": list(sr_),
            "inv": [statistic(sl, "inv"), statistic(sr_, "inv")],
            "imaj": [statistic(sl, "imaj"), statistic(sr_, "imaj")],
        })
    return rec


def _cmd_enumerate(args, out: _Out) -> int:
    if (args.shape is None) == (args.size is None):
        raise CliError("give exactly one of --shape or --size")
    if args.shape is not None:
        nats = enumerate_nats_of_shape(_shape_arg(args.shape), args.mode)
    else:
        nats = enumerate_nats_by_size(*_size_arg(args.size), mode=args.mode)
    out.rows(
        (_nat_record(n, args.stats) for n in nats),
        pretty=lambda r: " ".join(f"{k}={v}" for k, v in r.items()),
    )
    return 0


def _cmd_qhook(args, out: _Out) -> int:
    shape = _shape_arg(args.shape)
    product = qh.q_hook_product(shape)
    weighted = qh.q_weight_sum(shape, args.stat)
    rec = {
        "shape": format_tree(shape),
        "stat": args.stat,
        "product": _poly_json(product),
        "weighted_sum": _poly_json(weighted),
        "equal": product == weighted,
    }
    out.rows([rec], pretty=lambda r: f"product: {product}\nweighted sum ({args.stat}): {weighted}\nequal: {r['equal']}")
    return 0 if rec["equal"] else 1


def _cmd_biject(args, out: _Out) -> int:
    nat = nat_from_json(_read_json(args.input))
    report = validate_nat(nat)
    if not report:
        raise CliError(f"input is not a NAT ({report.kind}): {report.message}")
    tree = bj.xi(nat)
    if args.to == "not":
        out.rows([bj.not_to_json(tree)], pretty=lambda r: render.not_to_text(tree).rstrip("\n"))
    elif args.to == "words":
        out.rows([bj.word_pair_to_json(bj.omega(tree))])
    else:
        ft = bj.four_tuple(bj.omega(tree))
        out.rows([bj.four_tuple_to_json(ft)])
    return 0


def _cmd_series(args, out: _Out) -> int:
    if args.which == "dk":
        if args.d is None or args.k is None:
            raise CliError("--which dk needs --d and --k")
        if not 1 <= args.k <= args.d:
            raise CliError("need 1 <= k <= d")
        s = sr.fixed_point_series((args.d, args.k), args.order)
    else:
        s = sr.closed_form_series(args.which, args.order)
    if args.restrict is not None:
        if not 1 <= args.restrict <= s.nvars:
            raise CliError(f"--restrict must be in 1..{s.nvars}")
        s = sr.restrict_variable(s, args.restrict)
    if out.fmt == "csv":
        out.stream.write(s.to_csv(counts=False))
        return 0
    names = s.variable_names()
    records = []
    for (key, coeff), (_, count) in zip(s.items(), s.counts()):
        rec = {"exponents": list(key[: s.nvars])}
        if s.params:
            rec["params"] = list(key[s.nvars:])
        rec["coefficient"] = _num(coeff)
        rec["count"] = _num(count)
        records.append(rec)

    def pretty(r):
        mono = "*".join(f"{n}^{e}" for n, e in zip(names, r["exponents"] + r.get("params", [])) if e) or "1"
        return f"{mono}: coefficient {r['coefficient']}, count {r['count']}"

    out.rows(records, pretty=pretty)
    return 0


def _cmd_stirling(args, out: _Out) -> int:
    result = bj.stirling_count(args.w, args.h, args.alpha, args.beta)
    numeric = args.alpha is not None or args.beta is not None
    records = []
    for p, term in result.summands.items():
        value = _num(term.coefficient(0, 0)) if numeric else _poly_json(term)
        records.append({"p": p, "summand": value})
    total = _num(result.total.coefficient(0, 0)) if numeric else _poly_json(result.total)
    records.append({"p": "total", "summand": total})
    out.rows(records)
    return 0


def _load_dk(path: str):
    data = _read_json(path)
    if isinstance(data, dict) and "points" in data:
        return dk.geo_from_json(data)
    return dk.dk_from_json(data)


def _cmd_dk(args, out: _Out) -> int:
    if args.validate:
        obj = _load_dk(args.validate)
        report = dk.validate_geometric(obj) if isinstance(obj, dk.GeoNat) else dk.validate_dk(obj)
        out.rows([{"valid": report.ok, "kind": report.kind, "vertex": report.vertex, "message": report.message}])
        return 0 if report.ok else 1
    if args.enumerate:
        obj = _load_dk(args.enumerate)
        if isinstance(obj, dk.GeoNat):
            obj = dk.from_geometric(obj)
        nats = dk.enumerate_dk(dk.shape_of(obj), obj.d, obj.k, args.mode)
        out.rows((dk.dk_to_json(n) for n in nats), pretty=lambda r: render.dk_to_text(dk.dk_from_json(r)).rstrip("\n"))
        return 0
    obj = _load_dk(args.geometric)
    if isinstance(obj, dk.GeoNat):
        out.rows([dk.dk_to_json(dk.from_geometric(obj))])
        return 0
    report = dk.validate_dk(obj)
    if not report:
        raise CliError(f"input is not a ({obj.d},{obj.k})-NAT ({report.kind}): {report.message}")
    out.rows([dk.geo_to_json(dk.to_geometric(obj))])
    return 0


def _cmd_verify(args, out: _Out) -> int:
    from natrees import verify

    results = verify.run_all(args.max_size) if args.suite == "all" else verify.run_suite(args.suite, args.max_size)
    out.rows(
        (r.as_dict() for r in results),
        pretty=lambda r: f"{'PASS' if r['pass'] else 'FAIL'}  [{r['suite']}] {r['property']} ({r['detail']})",
    )
    return 0 if all(r.ok for r in results) else 1


def _cmd_render(args, out: _Out) -> int:
    data = _read_json(args.input)
    if isinstance(data, dict) and "d" in data and "root" in data:
        nat = dk.dk_from_json(data)
        text = render.dk_to_dot(nat) if args.format == "dot" else render.dk_to_text(nat)
    elif isinstance(data, dict) and "shape" in data:
        nat = nat_from_json(data)
        text = render.nat_to_dot(nat) if args.format == "dot" else render.nat_to_text(nat)
    elif isinstance(data, dict) and "children" in data and "colour" in data:
        tree = bj.not_from_json(data)
        text = render.not_to_dot(tree) if args.format == "dot" else render.not_to_text(tree)
    else:
        raise CliError("render expects a NAT, a (d,k)-NAT or a NOT tree in JSON")
    out.stream.write(text)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="natrees", description="Non-ambiguous trees toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=["json", "csv", "pretty"], default="json")

    c = sub.add_parser("count", help="hook formula with enumeration oracles")
    c.add_argument("--shape", required=True, help='binary tree, e.g. "((. .) (. .))"')
    fmt(c)

    e = sub.add_parser("enumerate", help="list NATs of a shape or of a size")
    e.add_argument("--shape")
    e.add_argument("--size", help="w,h: numbers of left and right vertices")
    e.add_argument("--stats", action="store_true")
    e.add_argument("--mode", choices=["recursive", "brute_force"], default="recursive")
    fmt(e)

    q = sub.add_parser("qhook", help="q-hook product and weighted sum")
    q.add_argument("--shape", required=True)
    q.add_argument("--stat", choices=["inv", "imaj"], default="inv")
    fmt(q)

    b = sub.add_parser("biject", help="NOT tree, word pair or 4-tuple of a NAT")
    b.add_argument("--to", choices=["not", "words", "tuple"], required=True)
    b.add_argument("--in", dest="input", required=True, help="NAT JSON file, or - for stdin")
    fmt(b)

    s = sub.add_parser("series", help="truncated generating functions")
    s.add_argument("--which", choices=["gfn", "gfh", "gfnab", "dk"], required=True)
    s.add_argument("--d", type=_non_negative)
    s.add_argument("--k", type=_non_negative)
    s.add_argument("--order", type=_non_negative, required=True)
    s.add_argument("--restrict", type=_non_negative, help="set x_i = 0 (1-based)")
    fmt(s)

    st = sub.add_parser("stirling", help="summation over the hook number")
    st.add_argument("--w", type=_non_negative, required=True)
    st.add_argument("--h", type=_non_negative, required=True)
    st.add_argument("--alpha", type=_number)
    st.add_argument("--beta", type=_number)
    fmt(st)

    d = sub.add_parser("dk", help="(d,k)-NATs: validate, enumerate, geometric form")
    g = d.add_mutually_exclusive_group(required=True)
    g.add_argument("--validate", metavar="FILE")
    g.add_argument("--enumerate", metavar="FILE")
    g.add_argument("--geometric", metavar="FILE")
    d.add_argument("--mode", choices=["recursive", "brute_force"], default="recursive")
    fmt(d)

    v = sub.add_parser("verify", help="run invariant suites")
    v.add_argument("--suite", choices=["all", "nat", "qhook", "bijections", "series", "dk"], default="all")
    v.add_argument("--max-size", type=_non_negative, default=6)
    fmt(v)

    r = sub.add_parser("render", help="DOT or text drawing")
    r.add_argument("--format", choices=["dot", "text"], default="dot")
    r.add_argument("--in", dest="input", required=True)
    return p


_COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "qhook": _cmd_qhook,
    "biject": _cmd_biject,
    "series": _cmd_series,
    "stirling": _cmd_stirling,
    "dk": _cmd_dk,
    "verify": _cmd_verify,
    "render": _cmd_render,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = _Out(stdout, getattr(args, "format", "json"))
        return _COMMANDS[args.command](args, out)
    except (CliError, TreeFormatError, ValueError, KeyError, TypeError) as exc:
        msg = str(exc).replace("\n", " ") or type(exc).__name__
        stderr.write(f"natrees: error: {msg}\n")
        return 2


def main() -> None:
    try:
        code = run()
        sys.stdout.flush()
    except BrokenPipeError:  # e.g. piped into head
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = 0
    sys.exit(code)


if __name__ == "__main__":
    main()
