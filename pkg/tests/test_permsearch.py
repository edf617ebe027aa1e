import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from cyclerange import (
    ValidationError,
    WeightVector,
    canonical_dihedral,
    cyclic_sum,
    enumerate_classes,
    family_analysis_n6,
    find_extreme,
    includes_general,
    verify_conjecture1,
)
from cyclerange.permsearch import conjecture_pattern, labelled_n6

from conftest import ascending
from n6_reference import parse as parse_reference


@pytest.mark.parametrize("n", range(3, 9))
def test_class_count(n):
    assert len(enumerate_classes(n)) == math.factorial(n - 1) // 2


@pytest.mark.parametrize("n", range(3, 8))
def test_classes_match_brute_force(n):
    brute = {canonical_dihedral(p).rep for p in itertools.permutations(range(1, n + 1))}
    got = [c.rep for c in enumerate_classes(n).classes]
    assert len(got) == len(set(got)) and set(got) == brute


def test_parallel_equals_serial():
    assert enumerate_classes(8, workers=2).classes == enumerate_classes(8).classes


@pytest.mark.parametrize("bad", [2, 11, 6.0, "6"])
def test_enumerate_rejects(bad):
    with pytest.raises(ValidationError):
        enumerate_classes(bad)


def test_reference_numbering():
    numbering, families = parse_reference()
    assert sorted(numbering) == list(range(1, 61))
    ours = labelled_n6()
    for j, p in numbering.items():
        assert ours[j] == canonical_dihedral(p), j
    table = enumerate_classes(6)
    assert len({table.labels[j] for j in range(1, 61)}) == 60
    for lab, members in families.items():
        assert {table.family_of(table.labels[j]) for j in members} == {lab}


def test_families_share_position_split():
    table = enumerate_classes(6)
    for lab, idx in table.families.items():
        assert len(idx) == 6
        splits = {frozenset((frozenset(table.classes[i].rep[0::2]), frozenset(table.classes[i].rep[1::2])))
                  for i in idx}
        assert len(splits) == 1


def test_index_lookup():
    t = enumerate_classes(5)
    assert t.classes[t.index((3, 1, 2, 5, 4))] == canonical_dihedral((3, 1, 2, 5, 4))


def test_conjecture_pattern():
    assert conjecture_pattern(6) == (1, 3, 5, 6, 4, 2)
    assert conjecture_pattern(7) == (1, 3, 5, 7, 6, 4, 2)
    assert conjecture_pattern(4) == (1, 3, 4, 2)


def test_cyclic_sum():
    w = WeightVector([1, 2, 3])
    assert cyclic_sum(w, (1, 2, 3)) == 1 * 4 + 4 * 9 + 9 * 1
    with pytest.raises(ValidationError):
        cyclic_sum(w, (1, 2, 2))


def test_find_extreme_n4_and_n5():
    w = WeightVector([1, 2, 3, 4])
    assert find_extreme(w, "max").best == canonical_dihedral((1, 2, 4, 3))
    assert find_extreme(w, "min").best == canonical_dihedral((1, 3, 2, 4))
    w5 = WeightVector([0.5, 1, 1.5, 2, 3])
    r = find_extreme(w5, "max", method="certified")
    assert r.status == "Optimum" and r.best == canonical_dihedral((1, 3, 5, 4, 2))
    assert len(r.evidence) == 11 and all(v.included for v in r.evidence)


def test_find_extreme_ties():
    # equal weights: every class is the same range
    r = find_extreme(WeightVector([1.0] * 5), "max")
    assert r.status == "Optimum" and len(r.ties) == 11 and r.margin == 0.0


def test_find_extreme_min_n6_reports_something():
    rng = random.Random(21)
    for _ in range(10):
        r = find_extreme(ascending(rng, 6), "min")
        if r.status == "Optimum":
            assert r.best is not None
        else:
            assert r.antichain and r.best is None


def test_find_extreme_validation():
    with pytest.raises(ValidationError):
        find_extreme(WeightVector([3, 2, 1, 4]))
    with pytest.raises(ValidationError):
        find_extreme(WeightVector([0, 1, 2, 3]))
    with pytest.raises(ValidationError):
        find_extreme(WeightVector([1, 2, 3, 4]), "sideways")


def test_n5_order_matches_cyclic_sum():
    # equal norm, product and fourth powers inside one weight set: the cyclic sum orders the ranges
    rng = random.Random(22)
    for _ in range(20):
        w = ascending(rng, 5)
        reps = [c.rep for c in enumerate_classes(5).classes]
        for p, q in itertools.combinations(reps, 2):
            sp, sq = cyclic_sum(w, p), cyclic_sum(w, q)
            if abs(sp - sq) < 1e-9 * (1 + abs(sp)):
                continue
            big, small = (p, q) if sp > sq else (q, p)
            assert includes_general(w.arrange(big), w.arrange(small)).margin >= -1e-9


def test_verify_conjecture_small_n():
    rep = verify_conjecture1(WeightVector([1, 2, 3]))
    assert rep.passed and rep.classes_checked == 1
    rep = verify_conjecture1(WeightVector([1, 2, 3, 4, 5, 6, 7]))
    assert rep.passed and rep.classes_checked == 360 and rep.worst_margin >= 0


def test_verify_conjecture_ties_allowed():
    assert verify_conjecture1(WeightVector([1, 1, 2, 2, 3, 3])).passed


def test_family_analysis():
    rng = random.Random(23)
    for _ in range(20):
        w = ascending(rng, 6)
        report, bound = family_analysis_n6(w)
        assert report.ok and bound.ok
        assert len(report.checks) == 61
        for j, x in bound.X.items():
            assert x is None or x == bound.X_formula[j]
        assert bound.X0 == sum(w.squares) / 3


def test_family_analysis_exact_on_rationals():
    w = WeightVector.from_squares([Fraction(1, 3), 1, 2, Fraction(7, 2), 5, 9])
    report, bound = family_analysis_n6(w)
    assert report.ok and bound.ok
    assert all(isinstance(c[2], Fraction) for c in report.checks)


def test_family_analysis_validation():
    with pytest.raises(ValidationError):
        family_analysis_n6(WeightVector([1, 2, 3, 4, 5]))
    with pytest.raises(ValidationError):
        family_analysis_n6(WeightVector([6, 5, 4, 3, 2, 1]))
