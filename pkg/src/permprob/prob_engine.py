"""Exact probabilities of permutation equalities in finite groups.

For ``p`` in S_n, ``Pr_p(G)`` is the probability that
``a_1 a_2 ... a_n = a_{p_1} a_{p_2} ... a_{p_n}`` for independent uniform
``a_i``.  ``Pr^n(G)`` denotes the value for the reversal ``<n ... 1>``.

Three independent routes are provided:

* exhaustive enumeration of n-tuples (:func:`count_solutions`,
  :func:`pr_brute`, :func:`stab_prod_size`, :func:`pr_reverse_via_stabprod`);
* the class-algebra sum over class structure constants, either literally
  (:func:`class_constants_power`) or by a pair-state recursion that is
  linear in n (:func:`pr_even_reversal`);
* the reduction to a reversal through the alternating-cycle count
  (:func:`pr_by_theorem`), where ``Pr_p = Pr^(n+1-k)`` for k cycles.

Everything is exact: counts are Python integers and probabilities are
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded, StructureError
from .group_core import (
    FiniteGroup,
    center,
    class_constants,
    class_constants_pair,
    commutator_subgroup,
)
from .perm_core import (
    DEFAULT_ENUMERATION_CAP,
    Permutation,
    alternating_cycle_count,
    hultman_table,
)

__all__ = [
    "ExactProbability",
    "SolutionCount",
    "SpectrumRow",
    "SpectrumReport",
    "PairClassState",
    "DEFAULT_MAX_ITERATIONS",
    "THREADS_ENV",
    "default_workers",
    "count_solutions",
    "pr_brute",
    "stab_prod_size",
    "pr_reverse_via_stabprod",
    "class_constants_power",
    "pair_class_states",
    "pr_even_reversal",
    "pr_even_reversal_series",
    "pr_by_theorem",
    "reduced_reversal_length",
    "spectrum",
    "gustafson_pr2",
    "central_square_closed_form",
    "commutator_limit",
]

ExactProbability = Fraction
SolutionCount = int

DEFAULT_MAX_ITERATIONS = 10**9
THREADS_ENV = "PERMPROB_THREADS"
_BLOCK = 1 << 18


def default_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        value = 0
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


# -- enumeration ------------------------------------------------------------


def _check_budget(m: int, n: int, max_iterations: int) -> None:
    if m**n > max_iterations:
        raise BudgetExceeded(
            f"enumerating {m}^{n} = {m**n} tuples exceeds the budget of {max_iterations}"
        )


def _tuple_blocks(m: int, n: int):
    """Odometer order over G^n: Python loop over a prefix, numpy over the rest.

    Yields lists of length n whose entries are ints (prefix) or flat index
    arrays (vectorized suffix) that broadcast together.
    """
    inner = n
    while inner > 1 and m**inner > _BLOCK:
        inner -= 1
    grids = list(np.indices((m,) * inner).reshape(inner, -1))
    for prefix in itertools.product(range(m), repeat=n - inner):
        yield list(prefix) + grids


def _product(table: np.ndarray, factors):
    acc = factors[0]
    for f in factors[1:]:
        acc = table[acc, f]
    return acc


def _count_blocks(m: int, n: int, count_block, workers: int | None) -> int:
    workers = default_workers() if workers is None else workers
    blocks = _tuple_blocks(m, n)
    if workers <= 1:
        return sum(count_block(b) for b in blocks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(count_block, blocks))


def count_solutions(
    group: FiniteGroup,
    p: Permutation,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    workers: int | None = None,
) -> SolutionCount:
    """Number of n-tuples with ``a_1...a_n = a_{p_1}...a_{p_n}``, by exhaustion."""
    m, n = group.order, p.n
    _check_budget(m, n, max_iterations)
    t = group.table
    order = [i - 1 for i in p.images]

    def count_block(a):
        left = _product(t, a)
        right = _product(t, [a[i] for i in order])
        return int(np.count_nonzero(left == right))

    return _count_blocks(m, n, count_block, workers)


def pr_brute(group: FiniteGroup, p: Permutation, **kwargs) -> ExactProbability:
    return Fraction(count_solutions(group, p, **kwargs), group.order**p.n)


def stab_prod_size(
    group: FiniteGroup,
    elements,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
    workers: int | None = None,
) -> SolutionCount:
    """``|{(a_1..a_n) : prod a_i^-1 g_i a_i = prod g_i}|`` by exhaustion."""
    gs = [int(g) for g in elements]
    m, n = group.order, len(gs)
    if n == 0:
        raise ValueError("need at least one element")
    _check_budget(m, n, max_iterations)
    t = group.table
    conj = group.conjugation
    target = group.mul(*gs)

    def count_block(a):
        prod = _product(t, [conj[ai, g] for ai, g in zip(a, gs)])
        return int(np.count_nonzero(prod == target))

    return _count_blocks(m, n, count_block, workers)


def pr_reverse_via_stabprod(
    group: FiniteGroup,
    half_length: int,
    max_iterations: int = DEFAULT_MAX_ITERATIONS,
) -> ExactProbability:
    """``Pr^(2n)`` as the sum of ``|Stab.Prod_n|`` over all n-tuples, over ``|G|^(2n)``."""
    m, n = group.order, half_length
    if n < 1:
        raise ValueError("half_length must be positive")
    _check_budget(m, 2 * n, max_iterations)
    total = sum(
        stab_prod_size(group, gs, max_iterations=max_iterations, workers=1)
        for gs in itertools.product(range(m), repeat=n)
    )
    return Fraction(total, m ** (2 * n))


# -- class algebra ----------------------------------------------------------


def class_constants_power(group: FiniteGroup, n: int) -> ExactProbability:
    """Literal class sum for ``Pr^(2n)``.

    Sums ``|Omega_j| c_{i_1..i_n;j}^2 / (prod |Omega_{i_t}| |G|^n)`` over all
    ``c(G)^(n+1)`` index tuples, with the arity-n constants counted by
    direct enumeration of factorizations.
    """
    if n < 1:
        raise ValueError("n must be positive")
    ct = group.conjugacy
    m = group.order
    tensor = class_constants(group, n).values
    cent = [ct.centralizer_orders[r] for r in ct.representatives]
    sizes = ct.class_sizes
    total = 0
    for idx in itertools.product(range(len(sizes)), repeat=n):
        weight = math.prod(cent[i] for i in idx)
        for j, size in enumerate(sizes):
            c = int(tensor[idx + (j,)])
            if c:
                total += size * c * c * weight
    # |G|/|Omega_i| = |C(i)|, so every term is over |G|^(2n)
    return Fraction(total, m ** (2 * n))


@dataclass(frozen=True)
class PairClassState:
    """Running contraction over class sequences of length ``length``.

    ``scaled[j, j']`` holds ``|G|^length`` times
    ``sum over (i_1..i_length) of c_{..;j} c_{..;j'} / prod |Omega_{i_t}|``,
    which is always an integer.
    """

    length: int
    group_order: int
    scaled: np.ndarray

    def value(self, j: int, jj: int) -> Fraction:
        return Fraction(int(self.scaled[j, jj]), self.group_order**self.length)


def pair_class_states(group: FiniteGroup, n: int):
    """Yield the pair states for lengths 1..n."""
    ct = group.conjugacy
    c = len(ct.classes)
    cent = [ct.centralizer_orders[r] for r in ct.representatives]
    pair = class_constants_pair(group).values
    mats = [pair[:, i, :].astype(object) for i in range(c)]
    state = np.zeros((c, c), dtype=object)
    for j in range(c):
        state[j, j] = cent[j]
    yield PairClassState(1, group.order, state)
    for length in range(2, n + 1):
        nxt = np.zeros((c, c), dtype=object)
        for i in range(c):
            nxt = nxt + cent[i] * (mats[i].T @ state @ mats[i])
        state = nxt
        yield PairClassState(length, group.order, state)


def _reversal_from_state(group: FiniteGroup, state: PairClassState) -> Fraction:
    sizes = group.conjugacy.class_sizes
    total = sum(size * int(state.scaled[j, j]) for j, size in enumerate(sizes))
    return Fraction(total, group.order ** (2 * state.length))


def pr_even_reversal(group: FiniteGroup, n: int) -> ExactProbability:
    """``Pr^(2n)(G)`` from the class constants, in time linear in n."""
    if n < 1:
        raise ValueError("n must be positive")
    state = None
    for state in pair_class_states(group, n):
        pass
    return _reversal_from_state(group, state)


def pr_even_reversal_series(group: FiniteGroup, n: int) -> list[ExactProbability]:
    """``[Pr^2, Pr^4, ..., Pr^(2n)]`` in one pass."""
    return [_reversal_from_state(group, s) for s in pair_class_states(group, n)]


def reduced_reversal_length(p: Permutation) -> int:
    """``n + 1 - k`` for k alternating cycles; 0 for the identity, even otherwise."""
    return p.n + 1 - alternating_cycle_count(p)


def pr_by_theorem(group: FiniteGroup, p: Permutation) -> ExactProbability:
    length = reduced_reversal_length(p)
    if length == 0:
        return Fraction(1)
    assert length % 2 == 0, "n - k is odd for every permutation"
    return pr_even_reversal(group, length // 2)


# -- spectrum and closed forms ------------------------------------------------


@dataclass(frozen=True)
class SpectrumRow:
    k: int
    hultman_count: int
    probability: ExactProbability


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    rows: tuple[SpectrumRow, ...]

    @property
    def distinct_values(self) -> frozenset[ExactProbability]:
        return frozenset(r.probability for r in self.rows)


def spectrum(group: FiniteGroup, n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> SpectrumReport:
    """One row per Hultman class of S_n, ordered by k ascending."""
    table = hultman_table(n, cap)
    half = (n + 1 - min(table.counts)) // 2
    series = pr_even_reversal_series(group, half) if half else []
    rows = []
    for k, count in table.rows():
        length = n + 1 - k
        prob = Fraction(1) if length == 0 else series[length // 2 - 1]
        rows.append(SpectrumRow(k, count, prob))
    return SpectrumReport(n, tuple(rows))


def gustafson_pr2(group: FiniteGroup) -> ExactProbability:
    return Fraction(group.class_count, group.order)


def central_square_closed_form(group: FiniteGroup, k: int) -> ExactProbability:
    """``Pr`` of ``<2 1 4 3 ... 2k 2k-1>`` when ``G'`` has order 2.

    Then every commutator is 1 or the central involution c, so the equality
    holds iff an even number of the k pairs fail to commute.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    derived = commutator_subgroup(group)
    if derived.size != 2:
        raise StructureError(f"needs |G'| = 2, but |G'| = {derived.size}")
    z = center(group)
    if not all(g in z for g in derived):
        raise StructureError("needs G' inside Z(G)")
    p = gustafson_pr2(group)
    q = 1 - p
    return sum(
        (math.comb(k, j) * p ** (k - j) * q**j for j in range(0, k + 1, 2)), Fraction(0)
    )


def commutator_limit(group: FiniteGroup) -> ExactProbability:
    """``lim Pr^(2n)(G) = 1/|G'|``."""
    return Fraction(1, commutator_subgroup(group).size)
