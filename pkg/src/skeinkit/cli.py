"""Command-line frontend.

Link subcommands read PD codes from a file (one link per line, ``#``
comments, optional ``U<k>;`` prefix) or from ``--pd``.  Every result is a
record ``{"input", "invariant", "value", "error"}``; a file yields a list of
records and keeps going past bad lines.

Exit status: 0 on success, 1 on input errors, 2 when an internal
consistency check fails.
"""

from __future__ import annotations

__all__ = ["main", "run", "CliError"]

import argparse
import ast
import json
import sys
from typing import Callable, Sequence

from . import bracket as _bracket
from . import colorings, framed_perm, homflypt, homology_skein, skein_algebra, tl
from .diagram import LinkDiagram, PdSyntaxError, parse_link_line, validate
from .poly import LaurentPoly

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class CliError(Exception):
    """Bad command line; carries the usage text."""

    def __init__(self, message: str, usage: str = ""):
        super().__init__(message)
        self.usage = usage


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which is reserved for internal errors here
    def error(self, message):
        raise CliError(message, self.format_usage())


def _encode(value):
    if isinstance(value, LaurentPoly):
        return value.to_json()
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def _text(value) -> str:
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _record(inp: str, name: str, value=None, error: str | None = None) -> dict:
    return {"input": inp, "invariant": name, "value": value, "error": error}


class _Outcome:
    """Collects records and the worst exit status seen."""

    def __init__(self):
        self.records: list[dict] = []
        self.text: list[str] = []
        self.status = EXIT_OK

    def ok(self, inp: str, name: str, value):
        self.records.append(_record(inp, name, _encode(value)))
        self.text.append(f"{inp}\t{name}\t{_text(value)}")

    def fail(self, inp: str, name: str, exc: BaseException, status: int):
        msg = f"{type(exc).__name__}: {exc}" if status == EXIT_INTERNAL else str(exc)
        self.records.append(_record(inp, name, error=msg))
        self.text.append(f"{inp}\t{name}\terror: {msg}")
        self.status = max(self.status, status)


def _evaluate(out: _Outcome, inp: str, name: str, fn: Callable[[], object], *, batch: bool = False):
    try:
        value = fn()
    except (ValueError, KeyError, IndexError) as exc:
        # a bad line in a batch is reported but does not fail the run
        out.fail(inp, name, exc, EXIT_OK if batch else EXIT_INPUT)
    except Exception as exc:  # noqa: BLE001 - anything else is an internal failure
        out.fail(inp, name, exc, EXIT_INTERNAL)
    else:
        out.ok(inp, name, value)


# -- link invariants -------------------------------------------------------------

def _jones_value(d: LinkDiagram):
    v = _bracket.jones(d)
    if v == _bracket.EMPTY_LINK:
        return v
    t = _bracket.to_t(v)
    return v if t is None else t


def _col3_value(d: LinkDiagram):
    lhs, rhs = colorings.col3_jones_check(d)
    if lhs != rhs:
        raise ArithmeticError(f"col_3 = {lhs} but 3|V(zeta)|^2 = {rhs}")
    return {"col3": lhs, "jones_side": str(rhs), "equal": True}


def _vassiliev_value(d: LinkDiagram, crossings: Sequence[int], invariant: str):
    for c in crossings:
        if not 1 <= c <= d.n_crossings:
            raise ValueError(f"crossing {c} is not in 1..{d.n_crossings}")
    sel = homflypt.SingularSelection(d, frozenset(c - 1 for c in crossings))
    return homflypt.vassiliev_difference(sel, invariant)


def _link_function(args) -> tuple[str, Callable[[LinkDiagram], object]]:
    cmd = args.command
    if cmd == "bracket":
        return "bracket", lambda d: _bracket.bracket(d, args.strategy)
    if cmd == "jones":
        return "jones", _jones_value
    if cmd == "homflypt":
        return "homflypt", homflypt.homflypt
    if cmd == "conway":
        return "conway", homflypt.conway
    if cmd == "colorings":
        if not colorings.is_prime(args.p):
            raise CliError(f"-p must be prime, got {args.p}")
        return f"colorings(p={args.p})", lambda d: colorings.count_colorings(d, args.p)
    if cmd == "col3-check":
        return "col3-check", _col3_value
    if cmd == "vassiliev":
        try:
            chosen = [int(x) for x in args.crossings.split(",") if x.strip()]
        except ValueError:
            raise CliError(f"--crossings must be comma-separated integers, got {args.crossings!r}") from None
        return (f"vassiliev[{args.invariant}]",
                lambda d: _vassiliev_value(d, chosen, args.invariant))
    raise CliError(f"unknown subcommand {cmd!r}")


def _diagram_of(line: str) -> LinkDiagram:
    parsed = parse_link_line(line)
    if parsed is None:
        raise ValueError("empty input")
    code, extra = parsed
    return validate(code, extra)


def _run_links(args, out: _Outcome) -> bool:
    """Returns True when the result is a batch (list of records)."""
    name, fn = _link_function(args)
    if args.pd is not None:
        if args.file is not None:
            raise CliError("give either a file or --pd, not both")
        _evaluate(out, args.pd, name, lambda: fn(_diagram_of(args.pd)))
        return False
    if args.file is None:
        raise CliError("a link file or --pd is required")
    try:
        with open(args.file, encoding="utf-8") if args.file != "-" else sys.stdin as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise CliError(f"cannot read {args.file}: {exc.strerror}") from None
    for line in lines:
        try:
            if parse_link_line(line) is None:
                continue
        except PdSyntaxError:
            pass
        text = line.strip()
        _evaluate(out, text, name, lambda: fn(_diagram_of(line)), batch=True)
    return True


# -- algebra subcommands -----------------------------------------------------------

def _run_tl(args, out: _Outcome):
    if args.tl_command == "dim":
        _evaluate(out, f"tl dim {args.n}", "tl-dim", lambda: len(_matchings(args.n)))
    elif args.tl_command == "annular-count":
        _evaluate(out, f"tl annular-count {args.n}", "tl-annular-count",
                  lambda: tl.count_annular_connections(_nonneg(args.n)))
    else:
        def product():
            m1 = tl.parse_matching(args.m1, args.n)
            m2 = tl.parse_matching(args.m2, args.n)
            return tl.tl_multiply(m1, m2)
        _evaluate(out, f"tl mul {args.m1} {args.m2}", "tl-mul", product)


def _nonneg(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return n


def _matchings(n: int):
    return tl.enumerate_matchings(_nonneg(n))


def _run_torus(args, out: _Outcome):
    word = [ch for ch in args.word if not ch.isspace() and ch not in "*·"]
    _evaluate(out, args.word, "torus-reduce", lambda: skein_algebra.nc_reduce(word, args.strategy))


def _run_wperm(args, out: _Outcome):
    def normal():
        word = framed_perm.parse_word(args.word)
        n = args.n or max([k + 1 for kind, k in word if kind == "s"] + [1])
        g = framed_perm.fp_from_word(word, n)
        nw = framed_perm.fp_normal_word(g)
        if framed_perm.fp_from_word(nw, n) != g:
            raise ArithmeticError("normal word does not evaluate to the input element")
        return {"n": n, "normal_word": framed_perm.format_word(nw),
                "weights": list(g.weights), "perm": [i + 1 for i in g.perm]}
    _evaluate(out, args.word, "wperm-normal", normal)


def _run_hecke(args, out: _Outcome):
    def product():
        if args.n < 1:
            raise ValueError("n must be positive")
        return framed_perm.hecke_mul(framed_perm.hecke_from_word(args.n, args.w1),
                                     framed_perm.hecke_from_word(args.n, args.w2))
    _evaluate(out, f"hecke mul {args.n} {args.w1!r} {args.w2!r}", "hecke-mul", product)


def _int_list(text: str, what: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        value = ast.literal_eval(text if text.startswith("[") else f"[{text}]")
    except (ValueError, SyntaxError):
        raise ValueError(f"cannot parse {what} {text!r}") from None
    return value


def _run_skein2(args, out: _Outcome):
    def decompose():
        pairing = _int_list(args.pairing, "pairing")
        data = homology_skein.PairingData(args.h1_rank, tuple(_int_list(args.h1_torsion, "torsion")),
                                          args.h2_rank, tuple(tuple(r) for r in pairing))
        return homology_skein.s2_decomposition(data, args.bound)
    inp = (f"skein2 --h1-rank {args.h1_rank} --h1-torsion {args.h1_torsion!r} "
           f"--h2-rank {args.h2_rank} --pairing {args.pairing!r} --bound {args.bound}")
    _evaluate(out, inp, "skein2", decompose)


# -- parser ----------------------------------------------------------------------

_LINK_COMMANDS = ("bracket", "jones", "homflypt", "conway", "colorings", "col3-check", "vassiliev")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    link = _Parser(add_help=False, parents=[common])
    link.add_argument("file", nargs="?", help="link file, one PD code per line ('-' for stdin)")
    link.add_argument("--pd", help="a single PD code, e.g. 'X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)'")

    parser = _Parser(prog="skeinkit", description="Skein-theoretic link invariants and algebras.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, metavar="subcommand")
    sub.required = True

    p = sub.add_parser("bracket", parents=[link], help="Kauffman bracket")
    p.add_argument("--strategy", choices=_bracket.STRATEGIES + ("skein_recursion",), default="state_sum")
    sub.add_parser("jones", parents=[link], help="Jones polynomial (in t when integral)")
    sub.add_parser("homflypt", parents=[link], help="Homflypt polynomial in v, z")
    sub.add_parser("conway", parents=[link], help="Conway polynomial in z")
    p = sub.add_parser("colorings", parents=[link], help="number of Fox p-colorings")
    p.add_argument("-p", type=int, required=True)
    sub.add_parser("col3-check", parents=[link], help="check col_3 = 3|V(exp(i pi/3))|^2")
    p = sub.add_parser("vassiliev", parents=[link], help="alternating sum over switchings")
    p.add_argument("--crossings", required=True, help="1-based crossing positions, e.g. 1,3,5")
    p.add_argument("--invariant", default="conway_coeff(2)",
                   help="'homflypt' or 'conway_coeff(k)' (default conway_coeff(2))")

    p = sub.add_parser("tl", help="Temperley-Lieb algebra")
    tsub = p.add_subparsers(dest="tl_command", parser_class=_Parser, metavar="tl-command")
    tsub.required = True
    q = tsub.add_parser("dim", parents=[common], help="number of crossingless matchings")
    q.add_argument("n", type=int)
    q = tsub.add_parser("annular-count", parents=[common], help="annular connection count")
    q.add_argument("n", type=int)
    q = tsub.add_parser("mul", parents=[common], help="product of two matchings, first on top")
    q.add_argument("m1", help="pair list such as '[(1,2),(3,4)]'")
    q.add_argument("m2")
    q.add_argument("-n", type=int, default=None, help="strand count (default: number of pairs)")

    p = sub.add_parser("torus", help="skein algebra of the punctured torus")
    tsub = p.add_subparsers(dest="torus_command", parser_class=_Parser, metavar="torus-command")
    tsub.required = True
    q = tsub.add_parser("reduce", parents=[common], help="normal form of a word in x, y, z")
    q.add_argument("word")
    q.add_argument("--strategy", choices=skein_algebra.STRATEGIES, default="incremental")

    p = sub.add_parser("wperm", help="framed permutations")
    tsub = p.add_subparsers(dest="wperm_command", parser_class=_Parser, metavar="wperm-command")
    tsub.required = True
    q = tsub.add_parser("normal", parents=[common], help="normal word of a word in t, s_i")
    q.add_argument("word")
    q.add_argument("-n", type=int, default=None, help="number of strands (default: inferred)")

    p = sub.add_parser("hecke", help="type-A Hecke algebra")
    tsub = p.add_subparsers(dest="hecke_command", parser_class=_Parser, metavar="hecke-command")
    tsub.required = True
    q = tsub.add_parser("mul", parents=[common], help="product of two words in g_i")
    q.add_argument("n", type=int)
    q.add_argument("w1")
    q.add_argument("w2")

    p = sub.add_parser("skein2", parents=[common], help="second skein module decomposition")
    p.add_argument("--h1-rank", type=int, required=True)
    p.add_argument("--h1-torsion", default="")
    p.add_argument("--h2-rank", type=int, required=True)
    p.add_argument("--pairing", default="[]")
    p.add_argument("--bound", type=int, default=2)
    return parser


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Run the CLI on ``argv``; returns the exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    out = _Outcome()
    try:
        args = parser.parse_args(list(argv))
        if args.command in _LINK_COMMANDS:
            batch = _run_links(args, out)
        else:
            batch = False
            {"tl": _run_tl, "torus": _run_torus, "wperm": _run_wperm,
             "hecke": _run_hecke, "skein2": _run_skein2}[args.command](args, out)
    except CliError as exc:
        stderr.write(exc.usage or parser.format_usage())
        stderr.write(f"skeinkit: error: {exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK

    if args.format == "json":
        payload = out.records if batch else out.records[0]
        stdout.write(json.dumps(payload, indent=None if batch else 2) + "\n")
    else:
        for line in out.text:
            stdout.write(line + "\n")
    if not batch and out.status == EXIT_INPUT:
        stderr.write(f"skeinkit: error: {out.records[0]['error']}\n")
    return out.status


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
