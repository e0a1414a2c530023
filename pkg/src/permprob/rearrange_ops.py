"""Exchange and cyclic operations on permutations, and their orbits.

Write ``phi_0 = 0`` in front of the one-line notation.  The *x--y exchange*
applies when ``x + 1 = phi_{i+1}`` and ``y = phi_i`` (the black edge
``x+1 -> y``) and ``x = phi_j``; it moves ``y`` so that it sits directly
after ``x``.  The *x--y cyclic* operation applies when the big black cycle
contains ``x+1 -> y -> x`` (``0 -> y -> n`` for ``x = n``) and relabels the
values between ``x`` and ``y``.

Both operations preserve the number of alternating cycles, and the
equivalence they generate has exactly the Hultman classes as its classes.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass

from .errors import IllegalOperation, OrbitCapExceeded
from .perm_core import (
    BigCycle,
    Permutation,
    alternating_cycle_count,
    big_black_cycle,
    permutation_of_big_cycle,
)

__all__ = [
    "OpKind",
    "OpApplication",
    "BOTH_KINDS",
    "DEFAULT_NODE_CAP",
    "legal_exchange_pairs",
    "apply_exchange",
    "legal_cyclic_pairs",
    "apply_cyclic",
    "apply",
    "successors",
    "predecessors",
    "equivalence_orbit",
    "are_xy_equivalent",
]

DEFAULT_NODE_CAP = 500_000


class OpKind(enum.Enum):
    EXCHANGE = "exchange"
    CYCLIC = "cyclic"


BOTH_KINDS = frozenset(OpKind)


@dataclass(frozen=True)
class OpApplication:
    kind: OpKind
    x: int
    y: int

    def __str__(self):
        return f"{self.x}--{self.y} {self.kind.value}"


# -- exchange ---------------------------------------------------------------


def _exchange_positions(p: Permutation, x: int) -> tuple[int, int] | None:
    """Return ``(i, j)`` with ``phi_{i+1} = x+1`` and ``phi_j = x``, or None."""
    n = p.n
    if not 0 <= x <= n - 1:
        return None
    phi = (0,) + p.images
    pos = {v: t for t, v in enumerate(phi)}
    return pos[x + 1] - 1, pos[x]


def legal_exchange_pairs(p: Permutation) -> set[tuple[int, int]]:
    phi = (0,) + p.images
    pairs = set()
    for x in range(p.n):
        i, j = _exchange_positions(p, x)
        # j == i means y == x: none of the four cases applies
        if j != i:
            pairs.add((x, phi[i]))
    return pairs


def apply_exchange(p: Permutation, x: int, y: int) -> Permutation:
    n = p.n
    if not 0 <= x <= n - 1:
        raise IllegalOperation(
            f"{x}--{y} exchange: x must lie in 0..{n - 1} so that x+1 is a vertex "
            f"reached by a black edge"
        )
    phi = (0,) + p.images
    i, j = _exchange_positions(p, x)
    if phi[i] != y:
        raise IllegalOperation(
            f"{x}--{y} exchange: the black edge out of x+1={x + 1} goes to {phi[i]}, not {y}"
        )
    if j == i:
        raise IllegalOperation(f"{x}--{y} exchange: x equals y, no case applies")
    # w = phi_{i-1} (cyclically), z = phi_{j+1}; x == w or y == z iff j == i-1 mod n+1
    if j == (i - 1) % (n + 1):
        return p
    if i == 0:
        images = phi[j + 1 :] + phi[1 : j + 1]
    elif i + 1 < j:
        images = phi[1:i] + phi[i + 1 : j + 1] + (phi[i],) + phi[j + 1 :]
    else:
        images = phi[1 : j + 1] + (phi[i],) + phi[j + 1 : i] + phi[i + 1 :]
    return Permutation(images)


def _undo_exchange_candidate(p: Permutation, x: int) -> Permutation | None:
    """Move the letter following ``x`` (cyclically, after ``phi_0 = 0``) to just before ``x+1``."""
    n = p.n
    word = [0, *p.images]
    jx = word.index(x)
    y = word[(jx + 1) % (n + 1)]
    if y == x + 1:
        return None
    word.remove(y)
    word.insert(word.index(x + 1), y)
    k = word.index(0)
    word = word[k:] + word[:k]
    return Permutation(tuple(word[1:]))


# -- cyclic -----------------------------------------------------------------


def legal_cyclic_pairs(p: Permutation) -> set[tuple[int, int]]:
    n = p.n
    succ = big_black_cycle(p).successor_map()
    pairs = set()
    for x in range(n + 1):
        y = succ[(x + 1) % (n + 1)]
        if succ[y] == x and y not in (x, (x + 1) % (n + 1)):
            pairs.add((x, y))
    return pairs


def _relabel_cyclic(x: int, y: int):
    if y > x + 1:

        def f(t):
            if t == x + 1:
                return y - 1
            if x + 2 <= t <= y - 1:
                return t - 1
            return t

    else:

        def f(t):
            if t == x:
                return y + 1
            if y + 1 <= t <= x - 1:
                return t + 1
            return t

    return f


def apply_cyclic(p: Permutation, x: int, y: int) -> Permutation:
    n = p.n
    if not (0 <= x <= n and 0 <= y <= n):
        raise IllegalOperation(f"{x}--{y} cyclic: x and y must lie in 0..{n}")
    succ = big_black_cycle(p).successor_map()
    head = (x + 1) % (n + 1)
    if succ[head] != y:
        raise IllegalOperation(
            f"{x}--{y} cyclic: the big black cycle has {head} -> {succ[head]}, not {head} -> {y}"
        )
    if succ[y] != x:
        raise IllegalOperation(
            f"{x}--{y} cyclic: the big black cycle has {y} -> {succ[y]}, not {y} -> {x}"
        )
    f = _relabel_cyclic(x, y)
    cycle = big_black_cycle(p)
    return permutation_of_big_cycle(BigCycle(tuple(f(t) for t in cycle.order)))


def _undo_cyclic_candidates(p: Permutation) -> list[tuple[int, int, Permutation]]:
    """Possible ``(x, y, source)`` with ``apply_cyclic(source, x, y) == p``; unverified."""
    n = p.n
    order = big_black_cycle(p).order
    size = n + 1
    out = []
    for t in range(size):
        a, b, c = order[t], order[(t + 1) % size], order[(t + 2) % size]
        # y > x+1 leaves (y-1, y, x); y < x leaves (x+1, y, y+1)
        for x, y in ((c, b), ((a - 1) % size, b)):
            if y > x + 1:
                inv = {y - 1: x + 1, **{s: s + 1 for s in range(x + 1, y - 1)}}
            elif y < x:
                inv = {y + 1: x, **{s: s - 1 for s in range(y + 2, x + 1)}}
            else:
                continue
            source = BigCycle(tuple(inv.get(s, s) for s in order))
            out.append((x, y, permutation_of_big_cycle(source)))
    return out


# -- orbits -----------------------------------------------------------------


def apply(p: Permutation, op: OpApplication) -> Permutation:
    if op.kind is OpKind.EXCHANGE:
        return apply_exchange(p, op.x, op.y)
    return apply_cyclic(p, op.x, op.y)


def successors(p: Permutation, kinds: Iterable[OpKind] = BOTH_KINDS) -> set[Permutation]:
    kinds = frozenset(kinds)
    out = set()
    if OpKind.EXCHANGE in kinds:
        out.update(apply_exchange(p, x, y) for x, y in legal_exchange_pairs(p))
    if OpKind.CYCLIC in kinds:
        out.update(apply_cyclic(p, x, y) for x, y in legal_cyclic_pairs(p))
    return out


def predecessors(p: Permutation, kinds: Iterable[OpKind] = BOTH_KINDS) -> set[Permutation]:
    """Permutations that one legal operation of the given kinds maps onto ``p``."""
    kinds = frozenset(kinds)
    out = set()
    if OpKind.EXCHANGE in kinds:
        for x in range(p.n):
            q = _undo_exchange_candidate(p, x)
            if q is None:
                continue
            for xx, yy in legal_exchange_pairs(q):
                if xx == x and apply_exchange(q, xx, yy) == p:
                    out.add(q)
    if OpKind.CYCLIC in kinds:
        for x, y, q in _undo_cyclic_candidates(p):
            if (x, y) in legal_cyclic_pairs(q) and apply_cyclic(q, x, y) == p:
                out.add(q)
    return out


def equivalence_orbit(
    p: Permutation,
    kinds: Iterable[OpKind] = BOTH_KINDS,
    node_cap: int = DEFAULT_NODE_CAP,
) -> frozenset[Permutation]:
    """Connected component of ``p`` in the graph of legal operations.

    Edges are followed in both directions: the orbit relation allows either
    permutation of a step to be the source.  Forward moves alone do not
    reach the whole class.
    """
    if node_cap <= 0:
        raise ValueError("node_cap must be positive")
    kinds = frozenset(kinds)
    seen = {p}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        for r in sorted(successors(q, kinds) | predecessors(q, kinds)):
            if r in seen:
                continue
            if len(seen) >= node_cap:
                raise OrbitCapExceeded(
                    f"orbit of {p} exceeds node cap {node_cap}", frozenset(seen)
                )
            seen.add(r)
            queue.append(r)
    return frozenset(seen)


def are_xy_equivalent(p: Permutation, q: Permutation, verify: bool = False) -> bool:
    """Whether ``p`` and ``q`` lie in the same exchange/cyclic equivalence class.

    The fast path compares alternating-cycle counts.  With ``verify=True``
    the orbit of ``p`` is searched instead.
    """
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    if verify:
        return q in equivalence_orbit(p)
    return alternating_cycle_count(p) == alternating_cycle_count(q)
