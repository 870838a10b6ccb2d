import itertools
import random

import pytest

from demazure.admissibility import (balanced_split, enumerate_dominant_splits,
                                    find_1_admissible, is_preadmissible,
                                    is_r_admissible, minimal_r,
                                    profile_bound_scan, pull_back, root_profile)
from demazure.rootdata import Root, root_system
from demazure.weights import finite_dominance

A2 = root_system("A", 2)
C2 = root_system("C", 2)


def test_preadmissible_basic():
    ok, wit = is_preadmissible(C2, (2, 1), ((1, 1), (1, 0)))
    assert ok and wit == ()
    # breaking sign inheritance on alpha2
    ok, wit = is_preadmissible(C2, (2, 1), ((2, 2), (0, -1)))
    assert not ok
    assert any(w[0] == Root((0, 1)) for w in wit)


def test_preadmissible_zero_pairing_forces_zero():
    # mu = varpi2 pairs to 0 on alpha1: parts +/-varpi1 break it
    ok, wit = is_preadmissible(C2, (0, 1), ((1, 1), (-1, 0)))
    assert not ok
    assert any(w[0] == Root((1, 0)) for w in wit)


def test_split_sum_validation():
    with pytest.raises(ValueError):
        is_preadmissible(C2, (2, 1), ((1, 1), (1, 1)))
    with pytest.raises(ValueError):
        is_r_admissible(C2, (2, 1), ((2, 1),), 0)


def test_root_profile_c2_example():
    split = ((1, 1), (1, 0))
    prof = root_profile(C2, split, Root((1, 1)), "-")
    assert prof.values == (3, 1)
    assert prof.x == 3 and prof.t == 2
    assert prof.counts == (1, 0, 1)
    assert prof.m(1) == 1 and prof.m(2) == 3
    assert prof.weighted_count() == 2


def test_profile_conservation():
    rng = random.Random(5)
    for _ in range(40):
        rs = [A2, C2][rng.randrange(2)]
        k = rng.randint(1, 3)
        lam = tuple(rng.randint(0, 3) for _ in range(rs.rank))
        split = balanced_split(rs, lam, k)
        for root in rs.positive_roots:
            pair = rs.pairing(lam, root)
            sign = "-" if pair >= 0 else "+"
            prof = root_profile(rs, split, root, sign)
            assert sum(prof.values) == abs(pair)
            assert sum(prof.counts) == k
            assert prof.counts[0] >= 1


def test_c2_featured_splits():
    mu = (2, 1)
    bad = ((1, 1), (1, 0))  # varpi1+varpi2, varpi1
    rep1 = is_r_admissible(C2, mu, bad, 1)
    assert rep1.preadmissible and not rep1.admissible
    fails = rep1.failures
    assert len(fails) == 1
    assert fails[0].profile.root == Root((1, 1)) and not fails[0].condition_a
    assert is_r_admissible(C2, mu, bad, 2).admissible

    good = ((2, 0), (0, 1))  # 2varpi1, varpi2
    assert is_r_admissible(C2, mu, good, 1).admissible
    assert is_r_admissible(C2, mu, good, 2).admissible


def test_condition_b_theta_case():
    rep = is_r_admissible(C2, (2, 1), ((2, 0), (0, 1)), 1)
    theta_recs = [rec for rec in rep.records if rec.profile.root == Root((2, 1))]
    assert [rec.condition_b for rec in theta_recs] == [True]


def test_minimal_r():
    assert minimal_r(C2, (2, 1), ((1, 1), (1, 0))) == 2
    assert minimal_r(C2, (2, 1), ((2, 0), (0, 1))) == 1
    assert minimal_r(C2, (2, 1), ((2, 2), (0, -1))) is None  # not pre-admissible
    assert minimal_r(C2, (2, 1), ((1, 1), (1, 0)), r_max=1) is None


def test_minimal_r_stabilizes_at_profile_bound():
    rng = random.Random(6)
    for _ in range(30):
        rs = [A2, C2][rng.randrange(2)]
        k = rng.randint(1, 3)
        lam = tuple(rng.randint(0, 4) for _ in range(rs.rank))
        split = balanced_split(rs, lam, k)
        big = max((root_profile(rs, split, root, "-").x
                   for root in rs.positive_roots), default=1)
        r = minimal_r(rs, lam, split)
        assert r is not None and r <= max(big, 1)
        assert is_r_admissible(rs, lam, split, max(big, 1)).admissible


def test_enumerate_dominant_splits_order_and_count():
    rs = root_system("A", 1)
    splits = list(enumerate_dominant_splits(rs, (2,), 2))
    assert splits == [(((2,), (0,))), ((1,), (1,)), ((0,), (2,))]
    # product of per-node stars-and-bars counts
    assert len(list(enumerate_dominant_splits(A2, (2, 1), 3))) == 6 * 3
    with pytest.raises(ValueError):
        next(enumerate_dominant_splits(A2, (-1, 0), 2))


def test_enumerated_pullbacks_are_preadmissible():
    rng = random.Random(7)
    for _ in range(25):
        rs = [A2, C2, root_system("B", 2)][rng.randrange(3)]
        mu = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
        k = rng.randint(1, 3)
        lam, word = finite_dominance(rs, mu)
        for split in itertools.islice(enumerate_dominant_splits(rs, lam, k), 10):
            cand = pull_back(rs, word, split)
            assert tuple(map(sum, zip(*cand))) == mu
            ok, _ = is_preadmissible(rs, mu, cand)
            assert ok


def test_admissibility_permutation_invariant():
    mu = (2, 1)
    for split in [((1, 1), (1, 0)), ((2, 0), (0, 1))]:
        for r in (1, 2):
            direct = is_r_admissible(C2, mu, split, r).admissible
            swapped = is_r_admissible(C2, mu, (split[1], split[0]), r).admissible
            assert direct == swapped


def test_find_1_admissible_c2():
    assert find_1_admissible(C2, (2, 1), 2) == ((2, 0), (0, 1))


def test_balanced_split_a3_boxes():
    rs = root_system("A", 3)
    assert balanced_split(rs, (5, 4, 7), 2) == ((3, 2, 3), (2, 2, 4))


def test_balanced_split_c2():
    assert balanced_split(C2, (2, 1), 2) == ((1, 1), (1, 0))


def test_balanced_split_nondominant_sum_and_admissible():
    split = balanced_split(A2, (1, -2), 2)
    assert tuple(map(sum, zip(*split))) == (1, -2)
    assert is_r_admissible(A2, (1, -2), split, 1).admissible


def test_balanced_split_type_a_properties():
    """Parts pair within 1 of each other on every root, spread <= 1,
    and the split is 1-admissible."""
    for rank in (1, 2, 3):
        rs = root_system("A", rank)
        for lam in itertools.product(range(4), repeat=rank):
            for k in (1, 2, 3):
                split = balanced_split(rs, lam, k)
                for root in rs.positive_roots:
                    vals = [rs.pairing(p, root) for p in split]
                    assert max(vals) - min(vals) <= 1
                assert is_r_admissible(rs, lam, split, 1).admissible


def test_profile_bound_scan_bc():
    for family in ("B", "C"):
        rs = root_system(family, 2)
        report = profile_bound_scan(rs, 2, 2)
        assert report.t_bound <= 2
        assert report.missing_escapes == ()
