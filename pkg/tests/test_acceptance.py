"""Acceptance criteria, each with its exact expected values and time limit.

Run alone with ``pytest -m acceptance``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import itertools
import math
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F

import numpy as np
import pytest

from permprob.group_core import (
    center,
    class_constants_pair,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_flags,
    quaternion_group,
    quotient_group,
    symmetric_group,
)
from permprob.perm_core import (
    BigCycle,
    all_permutations,
    alternating_cycle_count,
    big_black_cycle,
    circ_permutation,
    hultman_table,
    make_permutation,
    permutation_of_big_cycle,
    permutations_with_class,
    reversal,
)
from permprob.presented_groups import group_from_pc_presentation, preset_g1, preset_g2
from permprob.prob_engine import (
    central_square_closed_form,
    commutator_limit,
    gustafson_pr2,
    pr_brute,
    pr_by_theorem,
    pr_even_reversal,
    pr_reverse_via_stabprod,
)
from permprob.rearrange_ops import (
    BOTH_KINDS,
    apply_cyclic,
    apply_exchange,
    equivalence_orbit,
    legal_cyclic_pairs,
    legal_exchange_pairs,
)

pytestmark = pytest.mark.acceptance
P = make_permutation


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


@pytest.mark.criterion(1, "commuting probability equals c(G)/|G|")
def test_criterion_01_gustafson():
    with within(1):
        groups = {
            "C6": cyclic_group(6),
            "S3": symmetric_group(3),
            "Dih4": dihedral_group(4),
            "Q8": quaternion_group(),
            "S4": symmetric_group(4),
            "Dih4xDih4": direct_product(dihedral_group(4), dihedral_group(4)),
        }
        for name, g in groups.items():
            assert pr_brute(g, P((2, 1))) == F(g.class_count, g.order), name
        assert pr_brute(groups["Dih4"], P((2, 1))) == F(5, 8)
        assert pr_brute(groups["Q8"], P((2, 1))) == F(5, 8)


@pytest.mark.criterion(2, "Pr^4 = 17/32 for Dih4 and Q8 by four routes")
def test_criterion_02_seventeen_over_thirty_two():
    with within(1):
        for g in (dihedral_group(4), quaternion_group()):
            assert pr_brute(g, reversal(4)) == F(17, 32)
            assert pr_reverse_via_stabprod(g, 2) == F(17, 32)
            assert pr_even_reversal(g, 2) == F(17, 32)
            assert central_square_closed_form(g, 2) == F(17, 32)


@pytest.mark.criterion(3, "Hultman tables")
def test_criterion_03_hultman():
    assert hultman_table(3).counts == {2: 5, 4: 1}
    assert hultman_table(4).counts == {1: 8, 3: 15, 5: 1}
    for n in range(1, 7):
        table = hultman_table(n)
        assert table.total == math.factorial(n)
        assert all((n - k) % 2 == 1 for k in table.counts)
    with within(5):
        table = hultman_table(7)
    assert table.total == math.factorial(7)
    assert all((7 - k) % 2 == 1 for k in table.counts)


@pytest.mark.criterion(4, "reduction to a reversal agrees with brute force")
def test_criterion_04_reduction_exhaustive():
    with within(120):
        for g in (symmetric_group(3), dihedral_group(4), quaternion_group()):
            for n in range(1, 6):
                for p in all_permutations(n):
                    assert pr_brute(g, p) == pr_by_theorem(g, p), (g, p)
        rng = random.Random(2024)
        d4 = dihedral_group(4)
        pool = list(all_permutations(6))
        for p in rng.sample(pool, 50):
            assert pr_brute(d4, p) == pr_by_theorem(d4, p), p


@pytest.mark.criterion(5, "orbits under both operations are the Hultman classes")
def test_criterion_05_orbits():
    with within(60):
        for n in range(1, 7):
            for k in hultman_table(n).counts:
                members = permutations_with_class(n, k)
                assert equivalence_orbit(members[0], BOTH_KINDS) == set(members)
                assert equivalence_orbit(members[-1], BOTH_KINDS) == set(members)


@pytest.mark.criterion(6, "worked operation vectors")
def test_criterion_06_operation_vectors():
    exchanges = [
        ((4, 1, 6, 2, 5, 7, 3), (5, 1), (4, 6, 2, 5, 1, 7, 3)),
        ((4, 1, 6, 2, 5, 7, 3), (4, 2), (4, 2, 1, 6, 5, 7, 3)),
        ((4, 6, 1, 2, 5, 7, 3), (0, 6), (6, 4, 1, 2, 5, 7, 3)),
        ((4, 1, 6, 3, 5, 7, 2), (3, 0), (5, 7, 2, 4, 1, 6, 3)),
    ]
    for perm, pair, want in exchanges:
        assert pair in legal_exchange_pairs(P(perm))
        assert apply_exchange(P(perm), *pair).images == want
    assert big_black_cycle(P((6, 5, 3, 1, 4, 2))).order == (0, 2, 4, 1, 3, 5, 6)
    assert big_black_cycle(P((4, 1, 5, 2, 6, 3))).order == (0, 3, 6, 2, 5, 1, 4)
    cyclics = [
        ((6, 5, 3, 1, 4, 2), (1, 4), (0, 3, 4, 1, 2, 5, 6)),
        ((4, 1, 5, 2, 6, 3), (5, 2), (0, 4, 6, 2, 3, 1, 5)),
        ((4, 1, 5, 2, 6, 3), (0, 4), (0, 2, 6, 1, 5, 3, 4)),
        ((4, 1, 5, 2, 6, 3), (6, 3), (0, 3, 4, 2, 6, 1, 5)),
        ((4, 1, 5, 2, 6, 3), (3, 0), (0, 1, 6, 3, 5, 2, 4)),
    ]
    for perm, pair, cycle in cyclics:
        assert pair in legal_cyclic_pairs(P(perm))
        out = apply_cyclic(P(perm), *pair)
        assert big_black_cycle(out).order == cycle
        assert out == permutation_of_big_cycle(BigCycle(cycle))
    assert apply_cyclic(P((6, 5, 3, 1, 4, 2)), 1, 4).images == (6, 5, 2, 1, 4, 3)
    assert apply_cyclic(P((4, 1, 5, 2, 6, 3)), 0, 4).images == (4, 3, 5, 1, 6, 2)
    # 6--3: the result is the permutation of its big cycle, not <4 3 5 1 6 2>
    assert apply_cyclic(P((4, 1, 5, 2, 6, 3)), 6, 3).images == (5, 1, 6, 2, 4, 3)
    assert apply_cyclic(P((4, 1, 5, 2, 6, 3)), 6, 3).images != (4, 3, 5, 1, 6, 2)


@pytest.mark.criterion(7, "Dih4 closed form (1 + 4^-k)/2 and its limit")
def test_criterion_07_closed_form_and_limit():
    with within(1):
        d4 = dihedral_group(4)
        limit = commutator_limit(d4)
        assert limit == F(1, 2)
        values = [pr_even_reversal(d4, k) for k in range(1, 13)]
        for k, v in enumerate(values, 1):
            assert v == (1 + F(1, 4**k)) / 2
            assert v - limit == F(1, 4**k) / 2
        assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.criterion(8, "order-64 groups")
def test_criterion_08_order_64():
    with within(30):
        g1 = group_from_pc_presentation(preset_g1())
        g2 = group_from_pc_presentation(preset_g2())
        assert g1.order == g2.order == 64
        assert gustafson_pr2(g2) == F(22, 64)
        assert gustafson_pr2(direct_product(dihedral_group(4), dihedral_group(4))) == F(25, 64)
        q2 = quotient_group(g2, center(g2))
        assert q2.order == 16 and group_flags(q2).is_elementary_abelian
        q1 = quotient_group(g1, center(g1))
        assert q1.order == 16 and not group_flags(q1).is_abelian
        for n in range(1, 5):
            assert pr_even_reversal(g1, n) == pr_even_reversal(g2, n)
        # derived values, frozen
        assert [pr_even_reversal(g2, n) for n in range(1, 4)] == [F(11, 32), F(137, 512), F(2081, 8192)]


@pytest.mark.criterion(9, "Dih4 and Q8 share every Pr^(2n)")
def test_criterion_09_isoclinic_pair():
    with within(1):
        d4, q8 = dihedral_group(4), quaternion_group()
        for n in range(1, 11):
            assert pr_even_reversal(d4, n) == pr_even_reversal(q8, n)


@pytest.mark.criterion(10, "property suites")
def test_criterion_10_permutation_properties():
    for n in range(1, 7):
        for p in all_permutations(n):
            assert (n - alternating_cycle_count(p)) % 2 == 1
            circ = circ_permutation(p)
            assert all(circ(m) != (m + 1) % (n + 1) for m in range(n + 1))
            assert permutation_of_big_cycle(big_black_cycle(p)) == p


@pytest.mark.criterion(10, "property suites")
def test_criterion_10_conservation():
    for n in range(1, 7):
        for p in all_permutations(n):
            k = alternating_cycle_count(p)
            for x, y in legal_exchange_pairs(p):
                assert alternating_cycle_count(apply_exchange(p, x, y)) == k
            for x, y in legal_cyclic_pairs(p):
                assert alternating_cycle_count(apply_cyclic(p, x, y)) == k


SMALL = [
    cyclic_group(1), cyclic_group(6), symmetric_group(3), dihedral_group(4), quaternion_group(),
    dihedral_group(5), dihedral_group(6), direct_product(cyclic_group(2), symmetric_group(3)),
]


@pytest.mark.criterion(10, "property suites")
def test_criterion_10_class_algebra():
    for g in SMALL + [symmetric_group(4)]:
        sizes = np.array(g.conjugacy.class_sizes)
        assert sizes.sum() == g.order
        c = class_constants_pair(g).values
        assert np.array_equal(np.einsum("ikj,j->ik", c, sizes), np.outer(sizes, sizes))


@pytest.mark.criterion(10, "property suites")
def test_criterion_10_conjugate_factorizations():
    for g in SMALL:
        assert g.order <= 12
        t = g.table
        for cls in g.conjugacy.classes:
            for x, y in itertools.product(cls, repeat=2):
                count = int(np.count_nonzero((t == x) & (t.T == y)))
                assert count == g.order // len(cls)
