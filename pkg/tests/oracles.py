"""Slow, independent reference computations used to freeze expected values.

Nothing here imports permprob: groups are concrete permutation or
quaternion realizations multiplied by plain Python, and cycle graphs are
walked edge by edge.
"""

from __future__ import annotations

import itertools
from collections import Counter


# -- cycle graphs -----------------------------------------------------------


def alternating_cycles(images) -> int:
    """Count alternating cycles of the cycle graph by walking black then grey edges.

    Black edges run phi_i -> phi_{i-1} (indices mod n+1, phi_0 = 0); grey
    edges run m -> m+1 mod n+1.
    """
    phi = [0, *images]
    size = len(phi)
    black = {phi[i]: phi[i - 1] for i in range(size)}
    seen, cycles = set(), 0
    for start in range(size):
        if start in seen:
            continue
        cycles += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = (black[v] + 1) % size
    return cycles


def hultman_counts(n: int) -> dict[int, int]:
    return dict(Counter(alternating_cycles(p) for p in itertools.permutations(range(1, n + 1))))


# -- concrete groups ----------------------------------------------------------


class ConcreteGroup:
    """A group given by an element list and a multiplication function."""

    def __init__(self, elements, mul):
        self.elements = list(elements)
        self.mul = mul
        self.one = next(e for e in self.elements if all(mul(e, g) == g for g in self.elements))

    @property
    def order(self):
        return len(self.elements)

    def inv(self, g):
        return next(h for h in self.elements if self.mul(g, h) == self.one)

    def prod(self, seq):
        acc = self.one
        for g in seq:
            acc = self.mul(acc, g)
        return acc

    def classes(self):
        left, out = set(self.elements), []
        while left:
            g = next(iter(left))
            cls = {self.mul(self.mul(self.inv(h), g), h) for h in self.elements}
            out.append(cls)
            left -= cls
        return out

    def commuting_pairs(self):
        return sum(self.mul(a, b) == self.mul(b, a) for a in self.elements for b in self.elements)

    def derived_order(self):
        comms = {
            self.mul(self.mul(self.inv(g), self.inv(h)), self.mul(g, h))
            for g in self.elements
            for h in self.elements
        }
        sub = set(comms)
        while True:
            new = {self.mul(a, b) for a in sub for b in sub} | sub
            if new == sub:
                return len(sub)
            sub = new

    def center_order(self):
        return sum(all(self.mul(g, h) == self.mul(h, g) for h in self.elements) for g in self.elements)

    def equality_count(self, images) -> int:
        """Tuples with a_1..a_n = a_{p_1}..a_{p_n}, by exhaustion."""
        n = len(images)
        count = 0
        for a in itertools.product(self.elements, repeat=n):
            if self.prod(a) == self.prod(a[i - 1] for i in images):
                count += 1
        return count


def _compose(p, q):
    # apply q first, then p; same as the symmetric group's g∘h
    return tuple(p[i] for i in q)


def permutation_group(generators) -> ConcreteGroup:
    n = len(generators[0])
    elems = {tuple(range(n))}
    frontier = list(elems)
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = _compose(g, s)
                if h not in elems:
                    elems.add(h)
                    nxt.append(h)
        frontier = nxt
    return ConcreteGroup(sorted(elems), _compose)


def square_symmetries() -> ConcreteGroup:
    return permutation_group([(1, 2, 3, 0), (0, 3, 2, 1)])


def s3() -> ConcreteGroup:
    return permutation_group([(1, 0, 2), (1, 2, 0)])


def s4() -> ConcreteGroup:
    return permutation_group([(1, 0, 2, 3), (1, 2, 3, 0)])


def cyclic(m: int) -> ConcreteGroup:
    return ConcreteGroup(range(m), lambda a, b: (a + b) % m)


def _qmul(p, q):
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def unit_quaternions() -> ConcreteGroup:
    units = []
    for k in range(4):
        for s in (1, -1):
            v = [0, 0, 0, 0]
            v[k] = s
            units.append(tuple(v))
    return ConcreteGroup(units, _qmul)


def product(g: ConcreteGroup, h: ConcreteGroup) -> ConcreteGroup:
    elems = list(itertools.product(g.elements, h.elements))
    return ConcreteGroup(elems, lambda x, y: (g.mul(x[0], y[0]), h.mul(x[1], y[1])))
