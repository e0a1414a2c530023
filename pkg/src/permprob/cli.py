"""Command-line interface.

Group expressions combine atoms with the direct-product operator ``x``::

    C<m>     cyclic group of order m
    Dih<m>   dihedral group of order 2m (Dih4 is the order-8 dihedral group)
    Q8       quaternion group
    S<m>     symmetric group, m <= 6
    G1, G2   the two order-64 groups given by power-commutator presentations
    @path    a Cayley table file ("cayley <m>") or presentation file ("pc <r>")

Examples::

    permprob group info Dih4
    permprob prob Dih4 --perm "2 1 4 3"
    permprob spectrum "Dih4 x Dih4" --n 5 --format json
    permprob hultman --n 6
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import perm_core, prob_engine, rearrange_ops
from .errors import FormatError, PermProbError
from .group_core import (
    MAX_ORDER,
    FiniteGroup,
    center,
    commutator_subgroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_flags,
    quaternion_group,
    read_cayley,
    symmetric_group,
)
from .presented_groups import group_from_pc_presentation, parse_presentation, preset_g1, preset_g2

__all__ = ["OutputDocument", "parse_group_spec", "render", "build_parser", "main"]

_ATOM = re.compile(r"Dih(\d+)|C(\d+)|S(\d+)|Q8|G1|G2")


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass
class OutputDocument:
    """A table of results; every renderer shows the same cell strings."""

    command: str
    fields: list[str]
    rows: list[list]

    def cells(self) -> list[list[str]]:
        return [[fraction_str(v) if isinstance(v, Fraction) else str(v) for v in row] for row in self.rows]


def render(doc: OutputDocument, fmt: str) -> str:
    cells = doc.cells()
    if fmt == "json":
        payload = {"command": doc.command, "rows": [dict(zip(doc.fields, row)) for row in cells]}
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(doc.fields)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [max(len(x) for x in col) for col in zip(doc.fields, *cells)]
    lines = ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in [doc.fields, *cells]]
    return "\n".join(lines) + "\n"


# -- group expressions --------------------------------------------------------


def _load_group_file(path: str) -> FiniteGroup:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "cayley":
        return read_cayley(text)
    if head == "pc":
        return group_from_pc_presentation(parse_presentation(text))
    raise FormatError(f"{path}: expected a 'cayley' or 'pc' header")


def _atom(token: str) -> FiniteGroup:
    m = _ATOM.fullmatch(token)
    dih, cyc, sym = m.groups()
    if dih:
        return dihedral_group(int(dih))
    if cyc:
        return cyclic_group(int(cyc))
    if sym:
        return symmetric_group(int(sym))
    return {"Q8": quaternion_group, "G1": lambda: group_from_pc_presentation(preset_g1()),
            "G2": lambda: group_from_pc_presentation(preset_g2())}[token]()


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse ``atom (x atom)*``; a file reference must be followed by whitespace before ``x``."""
    pos, factors = 0, []
    while True:
        while pos < len(spec) and spec[pos].isspace():
            pos += 1
        if pos < len(spec) and spec[pos] == "@":
            end = pos
            while end < len(spec) and not spec[end].isspace():
                end += 1
            factors.append(_load_group_file(spec[pos + 1 : end]))
        else:
            m = _ATOM.match(spec, pos)
            if not m:
                raise FormatError(f"bad group expression at position {pos}: {spec!r}")
            end = m.end()
            factors.append(_atom(m.group(0)))
        pos = end
        while pos < len(spec) and spec[pos].isspace():
            pos += 1
        if pos == len(spec):
            break
        if spec[pos] != "x":
            raise FormatError(f"expected 'x' at position {pos}: {spec!r}")
        pos += 1
    group = factors[0]
    for f in factors[1:]:
        group = direct_product(group, f)
    if group.order > MAX_ORDER:
        raise FormatError(f"group order {group.order} exceeds cap {MAX_ORDER}")
    return group


def _parse_perm(text: str) -> perm_core.Permutation:
    try:
        values = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise FormatError(f"permutation must be integers: {text!r}") from None
    return perm_core.make_permutation(values)


def _parse_kinds(text: str) -> frozenset:
    kinds = set()
    for tok in filter(None, (t.strip() for t in text.split(","))):
        try:
            kinds.add(rearrange_ops.OpKind(tok))
        except ValueError:
            raise FormatError(f"unknown operation kind {tok!r}") from None
    if not kinds:
        raise FormatError("no operation kinds given")
    return frozenset(kinds)


# -- commands ---------------------------------------------------------------------


def cmd_group_info(args) -> OutputDocument:
    group = parse_group_spec(args.spec)
    flags = group_flags(group)
    rows = [
        ["order", group.order],
        ["classes", group.class_count],
        ["center", center(group).size],
        ["derived", commutator_subgroup(group).size],
        ["abelian", str(flags.is_abelian).lower()],
        ["elementary_abelian", str(flags.is_elementary_abelian).lower()],
        ["exponent", flags.exponent],
        ["pr2", prob_engine.gustafson_pr2(group)],
    ]
    return OutputDocument("group info", ["property", "value"], rows)


def cmd_prob(args) -> OutputDocument:
    group = parse_group_spec(args.spec)
    p = _parse_perm(args.perm)
    k = perm_core.alternating_cycle_count(p)
    if args.method == "brute":
        prob = prob_engine.pr_brute(group, p, max_iterations=args.max_iterations)
    else:
        prob = prob_engine.pr_by_theorem(group, p)
    return OutputDocument("prob", ["perm", "k", "method", "probability"], [[str(p), k, args.method, prob]])


def cmd_spectrum(args) -> OutputDocument:
    group = parse_group_spec(args.spec)
    report = prob_engine.spectrum(group, args.n, cap=args.cap)
    rows = [[r.k, r.hultman_count, r.probability] for r in report.rows]
    return OutputDocument("spectrum", ["k", "count", "probability"], rows)


def cmd_hultman(args) -> OutputDocument:
    table = perm_core.hultman_table(args.n, cap=args.cap)
    return OutputDocument("hultman", ["k", "count"], [list(r) for r in table.rows()])


def cmd_orbit(args) -> OutputDocument:
    p = _parse_perm(args.perm)
    orbit = rearrange_ops.equivalence_orbit(p, _parse_kinds(args.kinds), node_cap=args.node_cap)
    return OutputDocument("orbit", ["perm"], [[str(q)] for q in sorted(orbit)])


def cmd_cyclegraph(args) -> OutputDocument:
    p = _parse_perm(args.perm)
    black = perm_core.big_black_cycle(p)
    circ = perm_core.circ_permutation(p)
    cycles = " ".join("(" + ",".join(map(str, c)) + ")" for c in circ.cycles())
    rows = [["black_cycle", str(black)], ["circ_cycles", cycles], ["k", len(circ.cycles())]]
    return OutputDocument("cyclegraph", ["property", "value"], rows)


def cmd_limit(args) -> OutputDocument:
    group = parse_group_spec(args.spec)
    return OutputDocument("limit", ["derived", "limit"], [[commutator_subgroup(group).size, prob_engine.commutator_limit(group)]])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")

    parser = argparse.ArgumentParser(prog="permprob", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    group = sub.add_parser("group", help="group structure")
    gsub = group.add_subparsers(dest="group_command", required=True)
    info = gsub.add_parser("info", parents=[common], help="order, classes, center, derived subgroup")
    info.add_argument("spec")
    info.set_defaults(func=cmd_group_info)

    prob = sub.add_parser("prob", parents=[common], help="probability of one permutation equality")
    prob.add_argument("spec")
    prob.add_argument("--perm", required=True, help='one-line notation, e.g. "2 1 4 3"')
    prob.add_argument("--method", choices=("theorem", "brute"), default="theorem")
    prob.add_argument("--max-iterations", type=int, default=prob_engine.DEFAULT_MAX_ITERATIONS)
    prob.set_defaults(func=cmd_prob)

    spec = sub.add_parser("spectrum", parents=[common], help="probabilities over all of S_n")
    spec.add_argument("spec")
    spec.add_argument("--n", type=int, required=True)
    spec.add_argument("--cap", type=int, default=perm_core.DEFAULT_ENUMERATION_CAP)
    spec.set_defaults(func=cmd_spectrum)

    hult = sub.add_parser("hultman", parents=[common], help="Hultman numbers S_H(n, k)")
    hult.add_argument("--n", type=int, required=True)
    hult.add_argument("--cap", type=int, default=perm_core.DEFAULT_ENUMERATION_CAP)
    hult.set_defaults(func=cmd_hultman)

    orbit = sub.add_parser("orbit", parents=[common], help="equivalence orbit under exchange/cyclic operations")
    orbit.add_argument("--perm", required=True)
    orbit.add_argument("--kinds", default="exchange,cyclic")
    orbit.add_argument("--node-cap", type=int, default=rearrange_ops.DEFAULT_NODE_CAP)
    orbit.set_defaults(func=cmd_orbit)

    cg = sub.add_parser("cyclegraph", parents=[common], help="big black cycle and alternating cycles")
    cg.add_argument("--perm", required=True)
    cg.set_defaults(func=cmd_cyclegraph)

    lim = sub.add_parser("limit", parents=[common], help="limit of Pr^(2n), i.e. 1/|G'|")
    lim.add_argument("spec")
    lim.set_defaults(func=cmd_limit)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.func(args)
    except (PermProbError, ValueError) as exc:
        print(f"permprob: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(render(doc, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
