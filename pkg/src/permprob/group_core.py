"""Finite groups given by Cayley tables.

Elements are the dense indices ``0..m-1`` with the identity at index 0;
``table[g, h]`` is the index of ``g*h``.  Commutators follow
``[g, h] = g^-1 h^-1 g h``.

Constructors cover the groups the probability engine is exercised on:
cyclic, dihedral (``dihedral_group(m)`` has order ``2m``, so the order-8
dihedral group is ``dihedral_group(4)``), quaternion, symmetric and direct
products.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import (
    CapExceeded,
    FormatError,
    GroupError,
    MissingIdentity,
    MissingInverse,
    NotASubgroup,
    NotAssociative,
    NotNormal,
)

__all__ = [
    "FiniteGroup",
    "ConjugacyTable",
    "ElementSet",
    "ClassStructureTensor",
    "GroupFlags",
    "ASSOCIATIVITY_CHECK_LIMIT",
    "MAX_SYMMETRIC_DEGREE",
    "MAX_ORDER",
    "group_from_table",
    "cyclic_group",
    "dihedral_group",
    "quaternion_group",
    "symmetric_group",
    "direct_product",
    "conjugacy_table",
    "center",
    "commutator_subgroup",
    "is_subgroup",
    "quotient_group",
    "group_flags",
    "class_constants_pair",
    "class_constants",
    "read_cayley",
    "write_cayley",
    "load_cayley",
    "save_cayley",
]

ASSOCIATIVITY_CHECK_LIMIT = 128
MAX_SYMMETRIC_DEGREE = 6
MAX_ORDER = 4096


class FiniteGroup:
    """An immutable finite group.

    Build through :func:`group_from_table` or one of the constructors; the
    initializer trusts its input.
    """

    def __init__(self, table: np.ndarray, names: tuple[str, ...] | None = None):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        self.table = table
        self.names = tuple(names) if names is not None else None
        inv = np.empty(len(table), dtype=np.int64)
        rows, cols = np.nonzero(table == 0)
        inv[rows] = cols
        inv.setflags(write=False)
        self.inverse = inv

    identity = 0

    @property
    def order(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return np.array_equal(self.table, other.table) and self.names == other.names

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def mul(self, *elements: int) -> int:
        acc = 0
        for g in elements:
            acc = int(self.table[acc, g])
        return acc

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def commutator(self, g: int, h: int) -> int:
        return self.mul(self.inv(g), self.inv(h), g, h)

    def name(self, g: int) -> str:
        return self.names[g] if self.names is not None else str(g)

    def element_order(self, g: int) -> int:
        k, acc = 1, g
        while acc != 0:
            acc = int(self.table[acc, g])
            k += 1
        return k

    @cached_property
    def conjugation(self) -> np.ndarray:
        """``conjugation[a, g] = a^-1 g a``."""
        t = self.table
        ar = np.arange(self.order)
        out = t[t[self.inverse[:, None], ar[None, :]], ar[:, None]]
        out.setflags(write=False)
        return out

    @cached_property
    def conjugacy(self) -> ConjugacyTable:
        return conjugacy_table(self)

    @property
    def class_count(self) -> int:
        return len(self.conjugacy.classes)


def _normalize_identity(table: np.ndarray, names):
    """Relabel so that the identity has index 0."""
    m = len(table)
    ar = np.arange(m)
    ids = [e for e in range(m) if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar)]
    if not ids:
        raise MissingIdentity("no two-sided identity element")
    e = ids[0]
    if e == 0:
        return table, names
    perm = ar.copy()
    perm[0], perm[e] = e, 0  # perm[new] = old; a transposition is its own inverse
    relabelled = perm[table[np.ix_(perm, perm)]]
    if names is not None:
        names = list(names)
        names[0], names[e] = names[e], names[0]
    return relabelled, names


def _check_associativity(table: np.ndarray) -> None:
    m = len(table)
    for a in range(m):
        left = table[table[a]][:, :]  # (a*b)*c over all b, c
        right = table[a][table]  # a*(b*c)
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = map(int, bad[0])
            raise NotAssociative(
                f"({a}*{b})*{c} = {left[b, c]} but {a}*({b}*{c}) = {right[b, c]}",
                witness=(a, b, c),
            )


def group_from_table(table, names=None, check_associativity: bool | None = None) -> FiniteGroup:
    """Validate a Cayley table and return the group.

    Associativity is checked in O(m^3) when ``check_associativity`` is true,
    or by default when ``m <= ASSOCIATIVITY_CHECK_LIMIT``.
    """
    arr = np.asarray(table)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise GroupError("Cayley table must be a nonempty square array")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GroupError("Cayley table entries must be integers")
    m = arr.shape[0]
    if arr.min() < 0 or arr.max() >= m:
        raise GroupError(f"Cayley table entries must lie in 0..{m - 1}")
    if names is not None and len(names) != m:
        raise GroupError(f"expected {m} names, got {len(names)}")
    arr = arr.astype(np.int64)
    arr, names = _normalize_identity(arr, names)
    has_right = (arr == 0).any(axis=1)
    for g in range(m):
        if not has_right[g]:
            raise MissingInverse(f"element {g} has no right inverse", witness=g)
        h = int(np.argmax(arr[g] == 0))
        if arr[h, g] != 0:
            raise MissingInverse(f"element {g} has no two-sided inverse", witness=g)
    if check_associativity is None:
        check_associativity = m <= ASSOCIATIVITY_CHECK_LIMIT
    if check_associativity:
        _check_associativity(arr)
    return FiniteGroup(arr, names)


# -- constructors -------------------------------------------------------------


def _check_order(m: int) -> None:
    if m > MAX_ORDER:
        raise CapExceeded(f"group order {m} exceeds cap {MAX_ORDER}")


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    _check_order(m)
    ar = np.arange(m)
    return FiniteGroup((ar[:, None] + ar[None, :]) % m, tuple(str(i) for i in range(m)))


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of a regular m-gon, order 2m; element ``s^f r^i`` has index ``f*m + i``."""
    if m < 1:
        raise ValueError("dihedral parameter must be positive")
    _check_order(2 * m)
    table = np.empty((2 * m, 2 * m), dtype=np.int64)
    for f1, i1, f2, i2 in itertools.product(range(2), range(m), range(2), range(m)):
        # s r^i s = r^-i
        i = (i2 + (-i1 if f2 else i1)) % m
        table[f1 * m + i1, f2 * m + i2] = ((f1 + f2) % 2) * m + i
    names = [f"r{i}" if i else "1" for i in range(m)] + [f"sr{i}" if i else "s" for i in range(m)]
    return FiniteGroup(table, tuple(names))


_QUAT_UNITS = ("1", "i", "j", "k")
# unit products as (sign, unit) for 1, i, j, k
_QUAT_MUL = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion_group() -> FiniteGroup:
    """Q8 as {+-1, +-i, +-j, +-k}; index ``2*unit + (1 if negative)``."""
    table = np.empty((8, 8), dtype=np.int64)
    for a, b in itertools.product(range(8), repeat=2):
        sign, unit = _QUAT_MUL[a // 2, b // 2]
        if (a % 2) ^ (b % 2):
            sign = -sign
        table[a, b] = 2 * unit + (sign < 0)
    names = [("-" if s else "") + u for u in _QUAT_UNITS for s in (0, 1)]
    return FiniteGroup(table, tuple(names))


def symmetric_group(m: int) -> FiniteGroup:
    """S_m with elements in lexicographic one-line order; ``table[g, h]`` is ``g o h``."""
    if m < 1:
        raise ValueError("symmetric group degree must be positive")
    if m > MAX_SYMMETRIC_DEGREE:
        raise CapExceeded(f"symmetric_group degree {m} exceeds cap {MAX_SYMMETRIC_DEGREE}")
    perms = list(itertools.permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    table = np.empty((len(perms), len(perms)), dtype=np.int64)
    for gi, g in enumerate(perms):
        for hi, h in enumerate(perms):
            table[gi, hi] = index[tuple(g[h[x]] for x in range(m))]
    names = tuple("".join(str(v + 1) for v in p) for p in perms)
    return FiniteGroup(table, names)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Element ``(a, b)`` has index ``a*|H| + b``."""
    m, k = g.order, h.order
    _check_order(m * k)
    tg = np.asarray(g.table)
    th = np.asarray(h.table)
    table = (tg[:, None, :, None] * k + th[None, :, None, :]).reshape(m * k, m * k)
    names = tuple(f"({g.name(a)},{h.name(b)})" for a in range(m) for b in range(k))
    return FiniteGroup(table, names)


# -- conjugacy and subgroups ------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyTable:
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    centralizer_orders: tuple[int, ...]

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self):
        return len(self.classes)


def conjugacy_table(group: FiniteGroup) -> ConjugacyTable:
    """Classes ordered by their smallest element, so class 0 is the identity."""
    m = group.order
    conj = group.conjugation
    class_of = [-1] * m
    classes = []
    for g in range(m):
        if class_of[g] >= 0:
            continue
        members = tuple(sorted(set(conj[:, g].tolist())))
        for x in members:
            class_of[x] = len(classes)
        classes.append(members)
    t = group.table
    centralizers = tuple(int(n) for n in (t == t.T).sum(axis=1))
    return ConjugacyTable(
        tuple(class_of), tuple(classes), tuple(c[0] for c in classes), centralizers
    )


@dataclass(frozen=True)
class ElementSet:
    """A subset of a group's elements as membership flags."""

    flags: tuple[bool, ...]
    size: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "size", sum(self.flags))

    @classmethod
    def of(cls, order: int, members) -> ElementSet:
        flags = [False] * order
        for g in members:
            flags[int(g)] = True
        return cls(tuple(flags))

    def __contains__(self, g: int) -> bool:
        return self.flags[g]

    def __iter__(self):
        return (g for g, f in enumerate(self.flags) if f)

    def __len__(self):
        return self.size

    def members(self) -> list[int]:
        return list(self)


def center(group: FiniteGroup) -> ElementSet:
    t = group.table
    flags = (t == t.T).all(axis=1)
    return ElementSet(tuple(bool(f) for f in flags))


def _closure(group: FiniteGroup, generators) -> set[int]:
    t = group.table
    elements = {0, *map(int, generators)}
    frontier = list(elements)
    gens = sorted(elements)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                b = int(t[a, g])
                if b not in elements:
                    new.add(b)
        elements |= new
        frontier = list(new)
    return elements


def commutator_subgroup(group: FiniteGroup) -> ElementSet:
    t, inv = group.table, group.inverse
    # [g, h] = g^-1 h^-1 g h for all g, h
    ig_ih = t[inv[:, None], inv[None, :]]
    g_h = t
    comms = t[ig_ih, g_h]
    elements = _closure(group, np.unique(comms))
    subgroup = ElementSet.of(group.order, elements)
    _require_normal(group, subgroup)
    return subgroup


def is_subgroup(group: FiniteGroup, subset: ElementSet) -> bool:
    members = np.array(subset.members(), dtype=np.int64)
    if len(members) == 0 or 0 not in subset:
        return False
    products = group.table[np.ix_(members, members)]
    flags = np.array(subset.flags)
    return bool(flags[products].all())


def _require_normal(group: FiniteGroup, subset: ElementSet) -> None:
    members = np.array(subset.members(), dtype=np.int64)
    conj = group.conjugation[:, members]
    flags = np.array(subset.flags)
    bad = np.argwhere(~flags[conj])
    if len(bad):
        a, idx = map(int, bad[0])
        raise NotNormal(
            f"{a}^-1 * {members[idx]} * {a} = {conj[a, idx]} leaves the subgroup",
            witness=(a, int(members[idx])),
        )


def quotient_group(group: FiniteGroup, normal: ElementSet) -> FiniteGroup:
    """Cayley table on the cosets ``gN``, numbered by their smallest element."""
    if len(normal.flags) != group.order:
        raise NotASubgroup("element set belongs to a group of a different order")
    if not is_subgroup(group, normal):
        raise NotASubgroup("element set is not closed under the group operation")
    _require_normal(group, normal)
    t = group.table
    members = np.array(normal.members(), dtype=np.int64)
    coset_of = [-1] * group.order
    reps = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        for x in t[g, members].tolist():
            coset_of[x] = len(reps)
        reps.append(g)
    coset_of = np.array(coset_of)
    reps = np.array(reps)
    table = coset_of[t[np.ix_(reps, reps)]]
    return FiniteGroup(table)


@dataclass(frozen=True)
class GroupFlags:
    is_abelian: bool
    is_elementary_abelian: bool
    elementary_prime: int | None
    exponent: int


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def group_flags(group: FiniteGroup) -> GroupFlags:
    t = group.table
    abelian = bool((t == t.T).all())
    orders = [group.element_order(g) for g in range(group.order)]
    exponent = math.lcm(*orders)
    nontrivial = set(orders[1:])
    prime = None
    if abelian and len(nontrivial) == 1:
        (p,) = nontrivial
        if _is_prime(p):
            prime = p
    return GroupFlags(abelian, prime is not None, prime, exponent)


# -- class structure constants --------------------------------------------------


@dataclass(frozen=True)
class ClassStructureTensor:
    """``values[i_1, ..., i_n, j]`` counts factorizations ``y = x_1...x_n``
    of a fixed ``y`` in class j with ``x_t`` in class ``i_t``."""

    arity: int
    values: np.ndarray

    def __getitem__(self, key) -> int:
        return int(self.values[key])

    @property
    def entries(self) -> dict[tuple[tuple[int, ...], int], int]:
        return {
            (tuple(idx[:-1]), idx[-1]): int(v)
            for idx, v in np.ndenumerate(self.values)
        }


def class_constants_pair(group: FiniteGroup, verify_representatives: bool = False) -> ClassStructureTensor:
    """``c[i, k, j] = |{x in class i : x^-1 y in class k}|`` for the representative y of class j."""
    ct = group.conjugacy
    c = len(ct.classes)
    class_of = np.array(ct.class_of)
    t, inv = group.table, group.inverse

    def column(y):
        rest = t[inv, y]  # x^-1 y for every x
        counts = np.bincount(class_of * c + class_of[rest], minlength=c * c)
        return counts.reshape(c, c)

    values = np.zeros((c, c, c), dtype=np.int64)
    for j, y in enumerate(ct.representatives):
        values[:, :, j] = column(y)
        if verify_representatives:
            for other in ct.classes[j][1:2]:
                if not np.array_equal(column(other), values[:, :, j]):
                    raise AssertionError(f"class constants depend on the representative of class {j}")
    return ClassStructureTensor(2, values)


def class_constants(group: FiniteGroup, arity: int) -> ClassStructureTensor:
    """Arity-n constants by direct enumeration of all factorizations.

    Costs ``c(G) * |G|^(arity-1)`` products; meant for small arity.
    """
    if arity < 1:
        raise ValueError("arity must be positive")
    ct = group.conjugacy
    c = len(ct.classes)
    m = group.order
    class_of = np.array(ct.class_of)
    t, inv = group.table, group.inverse
    if arity == 1:
        return ClassStructureTensor(1, np.eye(c, dtype=np.int64))
    values = np.zeros((c,) * (arity + 1), dtype=np.int64)
    free = np.indices((m,) * (arity - 1)).reshape(arity - 1, -1)
    for j, y in enumerate(ct.representatives):
        prefix = np.zeros(free.shape[1], dtype=np.int64)
        code = np.zeros(free.shape[1], dtype=np.int64)
        for row in free:
            prefix = t[prefix, row]
            code = code * c + class_of[row]
        last = t[inv[prefix], y]
        code = code * c + class_of[last]
        counts = np.bincount(code, minlength=c**arity).reshape((c,) * arity)
        values[(Ellipsis, j)] = counts
    return ClassStructureTensor(arity, values)


# -- Cayley text format -----------------------------------------------------


def write_cayley(group: FiniteGroup) -> str:
    lines = [f"cayley {group.order}"]
    lines += [" ".join(map(str, row)) for row in group.table.tolist()]
    if group.names is not None:
        lines.append("names " + " ".join(group.names))
    return "\n".join(lines) + "\n"


def read_cayley(text: str) -> FiniteGroup:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("cayley"):
        raise FormatError("Cayley file must start with 'cayley <m>'")
    head = lines[0].split()
    if len(head) != 2 or not head[1].isdigit():
        raise FormatError(f"bad header line: {lines[0]!r}")
    m = int(head[1])
    if len(lines) < m + 1:
        raise FormatError(f"expected {m} table rows, found {len(lines) - 1}")
    rows = []
    for r, ln in enumerate(lines[1 : m + 1], start=2):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise FormatError(f"line {r}: non-integer entry") from None
        if len(row) != m:
            raise FormatError(f"line {r}: expected {m} entries, got {len(row)}")
        rows.append(row)
    names = None
    extra = lines[m + 1 :]
    if extra:
        if len(extra) > 1 or not extra[0].startswith("names"):
            raise FormatError("only an optional 'names ...' line may follow the table")
        names = extra[0].split()[1:]
    return group_from_table(np.array(rows, dtype=np.int64), names)


def load_cayley(path) -> FiniteGroup:
    return read_cayley(Path(path).read_text())


def save_cayley(group: FiniteGroup, path) -> None:
    Path(path).write_text(write_cayley(group))
