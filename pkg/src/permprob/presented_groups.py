"""2-groups from power-commutator presentations.

A presentation on generators ``a1 < a2 < ... < ar`` gives ``a_i^2`` and
``[a_i, a_j]`` (``i < j``) as words in strictly later generators; omitted
powers are trivial and omitted pairs commute.  Every element then has a
unique normal form ``a1^e1 ... ar^er`` with ``e_i`` in ``{0, 1}``, and
products are reduced to normal form by collection from the left:

* ``a_i a_i -> w(a_i^2)``
* ``a_j a_i -> a_i a_j [a_j, a_i]`` for ``j > i``, with ``[a_j, a_i] = [a_i, a_j]^-1``.

Generator numbers are 1-based throughout, as in the text format::

    pc 6
    pow 1 : a4
    com 1 2 : a3
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import FormatError, GroupError, PresentationError
from .group_core import FiniteGroup, group_from_table

__all__ = [
    "PcPresentation",
    "NormalForm",
    "parse_presentation",
    "format_presentation",
    "load_presentation",
    "group_from_pc_presentation",
    "collect",
    "check_relations",
    "generator_indices",
    "preset_g1",
    "preset_g2",
]

Word = tuple[int, ...]

# Each rewrite consumes a bounded amount of "weight"; this only guards
# against inputs that slip past validation.
_MAX_COLLECTION_STEPS = 1_000_000


@dataclass(frozen=True)
class PcPresentation:
    generator_count: int
    power_rules: dict[int, Word] = field(default_factory=dict)
    commutator_rules: dict[tuple[int, int], Word] = field(default_factory=dict)

    def __post_init__(self):
        r = self.generator_count
        if r < 1:
            raise PresentationError("need at least one generator")
        for i, word in self.power_rules.items():
            if not 1 <= i <= r:
                raise PresentationError(f"power rule for unknown generator a{i}")
            if any(not i < g <= r for g in word):
                raise PresentationError(
                    f"a{i}^2 = {_fmt_word(word)} must use only generators after a{i}"
                )
        for (i, j), word in self.commutator_rules.items():
            if not 1 <= i < j <= r:
                raise PresentationError(f"commutator rule [a{i}, a{j}] needs 1 <= i < j <= {r}")
            if any(not j < g <= r for g in word):
                raise PresentationError(
                    f"[a{i}, a{j}] = {_fmt_word(word)} must use only generators after a{j}"
                )

    def power(self, i: int) -> Word:
        return self.power_rules.get(i, ())

    def commutator(self, i: int, j: int) -> Word:
        """``[a_i, a_j]`` for ``i < j`` as listed."""
        return self.commutator_rules.get((i, j), ())


@dataclass(frozen=True, order=True)
class NormalForm:
    exponents: tuple[int, ...]

    def word(self) -> Word:
        return tuple(g for g, e in enumerate(self.exponents, 1) if e)

    def __str__(self):
        return "".join(f"a{g}" for g in self.word()) or "1"


def _fmt_word(word: Word) -> str:
    return " ".join(f"a{g}" for g in word) or "1"


def _inverse_word(pres: PcPresentation, word: Word) -> Word:
    # a^-1 = a * (a^2)^-1, and a^2 only involves later generators
    out: list[int] = []
    for g in reversed(word):
        out.append(g)
        out.extend(_inverse_word(pres, pres.power(g)))
    return tuple(out)


def _swap_rules(pres: PcPresentation) -> dict[tuple[int, int], Word]:
    """Right-hand sides for ``a_j a_i -> a_i a_j [a_j, a_i]``, keyed by ``(j, i)``."""
    return {
        (j, i): _inverse_word(pres, word)
        for (i, j), word in pres.commutator_rules.items()
        if word
    }


def collect(pres: PcPresentation, word: Word, _swaps=None) -> NormalForm:
    """Reduce a positive word to normal form by collection from the left."""
    swaps = _swap_rules(pres) if _swaps is None else _swaps
    w = list(word)
    steps = 0
    pos = 0
    while pos < len(w) - 1:
        a, b = w[pos], w[pos + 1]
        if a < b:
            pos += 1
            continue
        steps += 1
        if steps > _MAX_COLLECTION_STEPS:
            raise PresentationError("collection does not terminate")
        if a == b:
            w[pos : pos + 2] = pres.power(a)
        else:
            w[pos : pos + 2] = [b, a, *swaps.get((a, b), ())]
        pos = max(pos - 1, 0)
    exps = [0] * pres.generator_count
    for g in w:
        exps[g - 1] = 1
    return NormalForm(tuple(exps))


def _evaluate(group: FiniteGroup, gens: list[int], word: Word) -> int:
    return group.mul(*(gens[g - 1] for g in word)) if word else 0


def check_relations(pres: PcPresentation, group: FiniteGroup, gens: list[int]) -> None:
    """Re-evaluate every relation by table multiplication; raise on the first failure."""
    for i in range(1, pres.generator_count + 1):
        a = gens[i - 1]
        if group.mul(a, a) != _evaluate(group, gens, pres.power(i)):
            raise PresentationError(f"relation a{i}^2 = {_fmt_word(pres.power(i))} fails")
    for i, j in itertools.combinations(range(1, pres.generator_count + 1), 2):
        got = group.commutator(gens[i - 1], gens[j - 1])
        if got != _evaluate(group, gens, pres.commutator(i, j)):
            raise PresentationError(
                f"relation [a{i}, a{j}] = {_fmt_word(pres.commutator(i, j))} fails"
            )


def group_from_pc_presentation(pres: PcPresentation) -> FiniteGroup:
    r = pres.generator_count
    forms = [NormalForm(e) for e in itertools.product((0, 1), repeat=r)]
    forms.sort(key=lambda f: (sum(f.exponents), tuple(-e for e in f.exponents)))
    index = {f: k for k, f in enumerate(forms)}
    m = len(forms)
    swaps = _swap_rules(pres)

    # right multiplication by each generator, then products letter by letter
    by_gen = np.empty((m, r), dtype=np.int64)
    for f in forms:
        for g in range(1, r + 1):
            by_gen[index[f], g - 1] = index[collect(pres, f.word() + (g,), swaps)]
    table = np.empty((m, m), dtype=np.int64)
    for v in forms:
        col = np.arange(m)
        for g in v.word():
            col = by_gen[col, g - 1]
        table[:, index[v]] = col
    for u, v in itertools.product(forms, repeat=2):
        if index[collect(pres, u.word() + v.word(), swaps)] != table[index[u], index[v]]:
            raise PresentationError(f"inconsistent collection for {u} * {v}")
    if len(set(map(tuple, table.tolist()))) != m:
        raise PresentationError(f"presentation does not define a group of order 2^{r}")

    try:
        group = group_from_table(table, [str(f) for f in forms], check_associativity=True)
    except GroupError as exc:
        raise PresentationError(f"presentation is inconsistent: {exc}") from exc
    gens = [index[NormalForm(tuple(int(t == g) for t in range(r)))] for g in range(r)]
    check_relations(pres, group, gens)
    return group


def generator_indices(pres: PcPresentation, group: FiniteGroup) -> list[int]:
    """Element indices of ``a1..ar`` in a group built from ``pres``."""
    names = list(group.names)
    return [names.index(f"a{g}") for g in range(1, pres.generator_count + 1)]


def preset_g1() -> PcPresentation:
    return PcPresentation(
        6,
        power_rules={1: (4,), 4: (6,)},
        commutator_rules={(1, 2): (3,), (1, 3): (5,), (2, 4): (5,)},
    )


def preset_g2() -> PcPresentation:
    return PcPresentation(
        6,
        power_rules={},
        commutator_rules={(1, 2): (6,), (1, 3): (5,), (2, 4): (5,)},
    )


# -- text format ----------------------------------------------------------------


def _parse_word(text: str, r: int, lineno: int) -> Word:
    tokens = text.split()
    if tokens == ["1"]:
        return ()
    word = []
    for tok in tokens:
        t = tok[1:] if tok.startswith("a") else tok
        if not t.isdigit() or not 1 <= int(t) <= r:
            raise FormatError(f"line {lineno}: bad generator token {tok!r}")
        word.append(int(t))
    return tuple(word)


def parse_presentation(text: str) -> PcPresentation:
    lines = [(k, ln.strip()) for k, ln in enumerate(text.splitlines(), 1)]
    lines = [(k, ln) for k, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError("empty presentation")
    k0, head = lines[0]
    parts = head.split()
    if len(parts) != 2 or parts[0] != "pc" or not parts[1].isdigit():
        raise FormatError(f"line {k0}: expected 'pc <r>'")
    r = int(parts[1])
    powers: dict[int, Word] = {}
    comms: dict[tuple[int, int], Word] = {}
    for k, ln in lines[1:]:
        lhs, sep, rhs = ln.partition(":")
        if not sep:
            raise FormatError(f"line {k}: missing ':'")
        fields = lhs.split()
        try:
            if fields[0] == "pow" and len(fields) == 2:
                powers[int(fields[1])] = _parse_word(rhs, r, k)
            elif fields[0] == "com" and len(fields) == 3:
                comms[int(fields[1]), int(fields[2])] = _parse_word(rhs, r, k)
            else:
                raise FormatError(f"line {k}: expected 'pow i : w' or 'com i j : w'")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {k}: malformed rule") from None
    return PcPresentation(r, powers, comms)


def format_presentation(pres: PcPresentation) -> str:
    lines = [f"pc {pres.generator_count}"]
    for i in sorted(pres.power_rules):
        lines.append(f"pow {i} : {_fmt_word(pres.power_rules[i])}")
    for i, j in sorted(pres.commutator_rules):
        lines.append(f"com {i} {j} : {_fmt_word(pres.commutator_rules[i, j])}")
    return "\n".join(lines) + "\n"


def load_presentation(path) -> PcPresentation:
    return parse_presentation(Path(path).read_text())
