"""Command-line surface: an expression parser, canonical pretty-printing,
and subcommands wiring the library into reproducible runs.

Grammar (whitespace insensitive, explicit '*' only):

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' int)? | '-' factor
    atom   := rational | 'i' | 'q' | 'a' '[' int ',' int ']'
            | 't' | 'det' | 'z' | '(' expr ')'

``t`` and ``z`` (= a[1,1]*a[2,2]^-1) need the localized algebra; ``det`` is
always available.  Formatting is canonical, so parse(format(e)) == e.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .coeff import GaussianRational, ScalarQ
from .qalgebra import Element, TensorElement, center_lattice
from .triangular import (
    TriangularAlgebra,
    antipode,
    b_element,
    build,
    coproduct,
    counit,
    qdet,
    star,
    tgen,
)
from . import structure
from .autos import Sextuple, g_compose, g_decompose, g_inverse, is_hopf_auto, rho_conjugate
from .deriv import classify_T2, dertypes_expected, utq2_derivation_table


class ParseError(ValueError):
    """Syntax or semantic error in an input expression, with its position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(\d+)|(det|[aiqtz])|([-+*^/()\[\],]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", pos)
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alg: TriangularAlgebra):
        self.text = text
        self.alg = alg
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {tok[1]!r}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Element:
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return e

    def expr(self) -> Element:
        e = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take("op")[1]
            rhs = self.term()
            e = e + rhs if op == "+" else e - rhs
        return e

    def term(self) -> Element:
        e = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take("op", "*")
            e = e * self.factor()
        return e

    def factor(self) -> Element:
        if self.peek()[:2] == ("op", "-"):
            self.take("op", "-")
            return -self.factor()
        e = self.atom()
        if self.peek()[:2] == ("op", "^"):
            pos = self.take("op", "^")[2]
            k = self.signed_int()
            try:
                return e**k
            except ValueError as err:
                raise ParseError(str(err), pos) from None
        return e

    def signed_int(self) -> int:
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take("op", "-")
            sign = -1
        return sign * int(self.take("int")[1])

    def atom(self) -> Element:
        kind, value, pos = self.peek()
        if kind == "int":
            self.take("int")
            num = int(value)
            if self.peek()[:2] == ("op", "/"):
                self.take("op", "/")
                dtok = self.take("int")
                if int(dtok[1]) == 0:
                    raise ParseError("zero denominator", dtok[2])
                return self.alg.scalar(Fraction(num, int(dtok[1])))
            return self.alg.scalar(num)
        if kind == "name":
            self.take("name")
            if value == "i":
                return self.alg.scalar(GaussianRational(0, 1))
            if value == "q":
                return self.alg.scalar(ScalarQ({1: GaussianRational(1)}))
            if value == "a":
                self.take("op", "[")
                i = int(self.take("int")[1])
                self.take("op", ",")
                j = int(self.take("int")[1])
                self.take("op", "]")
                if not (1 <= i <= j <= self.alg.n):
                    raise ParseError(f"generator a[{i},{j}] out of range for n={self.alg.n}", pos)
                return self.alg.a(i, j)
            if value == "det":
                return qdet(self.alg)
            if value == "t":
                if not self.alg.localized:
                    raise ParseError("t needs the localized algebra", pos)
                return tgen(self.alg)
            if value == "z":
                if not self.alg.localized:
                    raise ParseError("z needs the localized algebra", pos)
                return self.alg.a(1, 1) * self.alg.a(2, 2).inverse()
        if (kind, value) == ("op", "("):
            self.take("op", "(")
            e = self.expr()
            self.take("op", ")")
            return e
        raise ParseError(f"unexpected token {value!r}", pos)


def parse(text: str, alg: TriangularAlgebra) -> Element:
    """Parse an expression into its normal form in ``alg``."""
    return _Parser(text, alg).parse()


def format_element(e: Element) -> str:
    """Canonical text form; monomials are ordered by descending exponent
    vectors in the lexicographic generator order."""
    return str(e)


def format_tensor(te: TensorElement) -> str:
    return str(te)


def parse_scalar(text: str) -> ScalarQ:
    """Parse a generator-free expression into a scalar."""
    e = _Parser(text, build(2, True)).parse()
    zero_mono = (0,) * e.algebra.ngens
    for mono in e.terms:
        if mono != zero_mono:
            raise ParseError("expected a scalar expression without generators", 0)
    return e.terms.get(zero_mono, ScalarQ({}))


def parse_sextuple(text: str) -> Sextuple:
    """Parse ``[l12,l11,l22,j,k,l]`` with scalars in the coefficient text
    format."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError("sextuple must be wrapped in [..]", 0)
    parts = []
    depth = 0
    cur = []
    for ch in body[1:-1]:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        cur.append(ch)
    parts.append("".join(cur))
    if len(parts) != 6:
        raise ParseError(f"sextuple needs 6 entries, got {len(parts)}", 0)
    scalars = [parse_scalar(p) for p in parts[:3]]
    try:
        ints = [int(p.strip()) for p in parts[3:]]
    except ValueError:
        raise ParseError("the last three sextuple entries must be integers", 0) from None
    return Sextuple(scalars[0], scalars[1], scalars[2], *ints)


# -- commands -----------------------------------------------------------------


def _algebra(args) -> TriangularAlgebra:
    return build(args.n, args.localized)


def _emit(args, text: str, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_normalize(args) -> int:
    e = parse(args.expr, _algebra(args))
    _emit(args, format_element(e), {"expr": format_element(e), "terms": e.to_json()})
    return 0


def _cmd_equal(args) -> int:
    alg = _algebra(args)
    same = parse(args.lhs, alg) == parse(args.rhs, alg)
    _emit(args, "equal" if same else "not equal", {"equal": same})
    return 0 if same else 1


def _cmd_delta(args) -> int:
    te = coproduct(parse(args.expr, _algebra(args)))
    payload = {
        "tensor": format_tensor(te),
        "terms": [[list(u), list(v), c.to_json()] for (u, v), c in sorted(te.terms.items())],
    }
    _emit(args, format_tensor(te), payload)
    return 0


def _cmd_counit(args) -> int:
    s = counit(parse(args.expr, _algebra(args)))
    _emit(args, str(s), {"scalar": str(s), "terms": s.to_json()})
    return 0


def _cmd_antipode(args) -> int:
    e = antipode(parse(args.expr, _algebra(args)))
    _emit(args, format_element(e), {"expr": format_element(e), "terms": e.to_json()})
    return 0


def _cmd_star(args) -> int:
    e = star(parse(args.expr, _algebra(args)))
    _emit(args, format_element(e), {"expr": format_element(e), "terms": e.to_json()})
    return 0


def _cmd_b(args) -> int:
    e = b_element(args.i, args.j, _algebra(args))
    _emit(args, format_element(e), {"expr": format_element(e), "terms": e.to_json()})
    return 0


def _cmd_center(args) -> int:
    lat = center_lattice(_algebra(args))
    if args.json:
        print(
            json.dumps(
                {
                    "kernel_basis": [list(v) for v in lat.kernel_basis],
                    "generators": [list(v) for v in lat.generators],
                    "violations": [list(v) for v in lat.violations],
                }
            )
        )
        return 0
    if not lat.generators:
        print("Z = K (no central monomials beyond scalars)")
    for v in lat.generators:
        print(f"central monomial direction: {tuple(v)}")
    for v in lat.violations:
        print(f"kernel direction outside the admissible cone: {tuple(v)}")
    return 0


def _cmd_check(args) -> int:
    names = args.suites or ["all"]
    if names == ["all"]:
        names = list(structure.SUITES) + ["negative-controls"]
    reports = []
    for name in names:
        if name == "negative-controls":
            reports.append(structure.negative_controls_report(args.n))
        elif name in structure.SUITES:
            reports.append(structure.SUITES[name](args.n, seed=args.seed))
        else:
            print(f"unknown suite {name!r}; available: {', '.join(structure.SUITES)}, negative-controls",
                  file=sys.stderr)
            return 2
    for rep in reports:
        print(rep.line())
    if args.json:
        print(json.dumps([
            {"name": r.name, "n": r.n, "passed": r.passed, "witness": r.witness}
            for r in reports
        ]))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_derivations(args) -> int:
    if args.action == "classify":
        rows = classify_T2(args.bound)
        if args.json:
            print(json.dumps([
                {"s": st[0], "t": st[1], "nu": list(nu), "verdict": verdict}
                for st, nu, verdict in rows
            ]))
        else:
            for st, nu, verdict in rows:
                word = "derivation" if verdict else "not a derivation"
                print(f"D[{st[0]},{st[1]}] nu={nu}: {word}")
        bad = [r for r in rows if r[2] != dertypes_expected(r[0], r[1])]
        return 0 if not bad else 1
    rep = utq2_derivation_table()
    print(rep.line())
    if args.json:
        print(json.dumps({"name": rep.name, "passed": rep.passed, "witness": rep.witness}))
    return 0 if rep.passed else 1


def _cmd_autos(args) -> int:
    if args.action == "compose":
        out = g_compose(parse_sextuple(args.args[0]), parse_sextuple(args.args[1]))
    elif args.action == "invert":
        out = g_inverse(parse_sextuple(args.args[0]))
    elif args.action == "conjugate":
        out = rho_conjugate(parse_sextuple(args.args[0]))
    elif args.action == "decompose":
        g1, g2, g3 = g_decompose(parse_sextuple(args.args[0]))
        text = f"{g1} * {g2} * {g3}"
        _emit(args, text, {"factors": [str(g1), str(g2), str(g3)]})
        return 0
    elif args.action == "is-hopf":
        verdict = is_hopf_auto(parse_sextuple(args.args[0]))
        _emit(args, "hopf" if verdict else "not hopf", {"hopf": verdict})
        return 0 if verdict else 1
    else:  # unreachable; argparse restricts choices
        return 2
    _emit(args, str(out), {"sextuple": str(out)})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="qtriangular",
        description="Exact computations in the quantum upper-triangular bialgebra "
        "and its Hopf localization.",
    )
    top.add_argument("--n", type=int, default=2, help="matrix size (default 2)")
    top.add_argument("--localized", action="store_true", help="invert the diagonal generators")
    top.add_argument("--json", action="store_true", help="emit JSON instead of plain text")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("equal", help="exact equality of two expressions")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.set_defaults(fn=_cmd_equal)

    p = sub.add_parser("delta", help="comultiplication of an expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_delta)

    p = sub.add_parser("counit", help="counit of an expression")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_counit)

    p = sub.add_parser("antipode", help="antipode (localized algebra only)")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_antipode)

    p = sub.add_parser("star", help="Hopf *-involution (localized algebra only)")
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_star)

    p = sub.add_parser("b", help="the cofactor-like element b[i,j]")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(fn=_cmd_b)

    p = sub.add_parser("center", help="central monomial directions")
    p.set_defaults(fn=_cmd_center)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("suites", nargs="*", help="suite names, or 'all'")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("derivations", help="derivation classification and table")
    p.add_argument("action", choices=["classify", "check-table"])
    p.add_argument("--bound", type=int, default=3, help="max exponent for classify")
    p.set_defaults(fn=_cmd_derivations)

    p = sub.add_parser("autos", help="sextuple automorphism group operations")
    p.add_argument("action", choices=["compose", "invert", "conjugate", "decompose", "is-hopf"])
    p.add_argument("args", nargs="+", help="sextuples as [l12,l11,l22,j,k,l]")
    p.set_defaults(fn=_cmd_autos)

    return top


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "autos":
        want = 2 if args.action == "compose" else 1
        if len(args.args) != want:
            print(f"autos {args.action} needs {want} sextuple(s)", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except (ParseError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
