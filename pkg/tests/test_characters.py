import itertools
import random

import pytest

from demazure.admissibility import balanced_split, is_r_admissible
from demazure.characters import (GradedCharacter, demazure_character,
                                 demazure_operator, embedding_certificate,
                                 finite_character, g0_branch,
                                 parabolic_character)
from demazure.rootdata import root_system

A1 = root_system("A", 1)
A2 = root_system("A", 2)
B2 = root_system("B", 2)
C2 = root_system("C", 2)


def random_character(rs, rng, *, level=2, allow_negative=True):
    terms = {}
    for _ in range(rng.randint(1, 6)):
        fin = tuple(rng.randint(-4, 4) for _ in range(rs.rank))
        grade = rng.randint(0, 3)
        mult = rng.randint(-3, 3) if allow_negative else rng.randint(1, 3)
        terms[(fin, level, grade)] = mult
    return GradedCharacter(terms)


def test_character_container_basics():
    c = GradedCharacter({((1, 0), 2, 0): 1, ((0, 1), 2, 1): 0})
    assert ((0, 1), 2, 1) not in c.terms  # zeros dropped
    assert c.coefficient((1, 0), 2, 0) == 1
    assert c.dimension() == 1
    d = c + c
    assert d.coefficient((1, 0), 2, 0) == 2
    assert (d - c) == c
    assert c.scale(3).dimension() == 3


def test_tensor_adds_all_slots():
    a = GradedCharacter.from_weight((1, 0), 1, 2)
    b = GradedCharacter.from_weight((0, -1), 3, 1)
    t = a.tensor(b)
    assert t.terms == {((1, -1), 4, 3): 1}


def test_operator_string_cases():
    # m >= 0 expands down the string
    c = demazure_operator(A2, 1, GradedCharacter.from_weight((2, 0), 1))
    assert sorted(c.terms) == [((-2, 2), 1, 0), ((0, 1), 1, 0), ((2, 0), 1, 0)]
    # m == -1 kills the term
    c = demazure_operator(A2, 1, GradedCharacter.from_weight((-1, 0), 1))
    assert c.terms == {}
    # m <= -2 contributes negatively on the interior of the string
    c = demazure_operator(A2, 1, GradedCharacter.from_weight((-3, 0), 1))
    assert c.terms == {((-1, -1), 1, 0): -1, ((1, -2), 1, 0): -1}
    with pytest.raises(ValueError):
        demazure_operator(A2, 3, GradedCharacter.from_weight((0, 0), 1))


def test_operator_node_zero_moves_grade():
    c = demazure_operator(A1, 0, GradedCharacter.from_weight((0,), 1, 1))
    assert c.terms == {((0,), 1, 1): 1, ((2,), 1, 0): 1}


def test_frozen_a1_character():
    c = demazure_character(A1, (2,), 1)
    assert c.terms == {((2,), 1, 0): 1, ((0,), 1, 1): 1}


def test_frozen_a2_dim5_character():
    c = demazure_character(A2, (1, -2), 2)
    want = {(1, 1), (2, -1), (-1, 2), (0, 0), (1, -2)}
    assert c.dimension() == 5
    assert {fin for (fin, lvl, g) in c.terms} == want
    assert all(g == 0 and lvl == 2 for (_, lvl, g) in c.terms)
    assert all(mult == 1 for mult in c.terms.values())


def test_frozen_factor_characters_and_tensor():
    f1 = demazure_character(A2, (0, -1), 1)
    f2 = demazure_character(A2, (1, -1), 1)
    assert {fin for (fin, _, _) in f1.terms} == {(1, 0), (-1, 1), (0, -1)}
    assert {fin for (fin, _, _) in f2.terms} == {(0, 1), (1, -1)}
    t = f1.tensor(f2)
    assert t.dimension() == 6
    assert t.coefficient((0, 0), 2, 0) == 2


def test_level_zero_rejected():
    with pytest.raises(ValueError):
        demazure_character(A2, (1, 0), 0)


def test_idempotence_on_random_characters():
    rng = random.Random(11)
    systems = [A1, A2, C2]
    for _ in range(200):
        rs = systems[rng.randrange(3)]
        c = random_character(rs, rng)
        i = rng.randint(0, rs.rank)
        once = demazure_operator(rs, i, c)
        assert demazure_operator(rs, i, once) == once


def test_braid_relations_rank_two():
    rng = random.Random(12)

    def compose(rs, word, c):
        for i in reversed(word):
            c = demazure_operator(rs, i, c)
        return c

    for _ in range(60):
        c = random_character(A2, rng)
        assert compose(A2, (1, 2, 1), c) == compose(A2, (2, 1, 2), c)
    for rs in (B2, C2):
        for _ in range(60):
            c = random_character(rs, rng)
            assert compose(rs, (1, 2, 1, 2), c) == compose(rs, (2, 1, 2, 1), c)


def test_word_independence_via_random_tie_breaks():
    rng = random.Random(13)
    for rs in (A1, A2, C2):
        for _ in range(20):
            mu = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
            k = rng.randint(1, 3)
            base = demazure_character(rs, mu, k)
            again = demazure_character(rs, mu, k, pick=rng.choice)
            assert base == again


def test_positivity_and_normalization():
    rng = random.Random(14)
    for _ in range(40):
        rs = [A1, A2, C2][rng.randrange(3)]
        mu = tuple(rng.randint(-3, 3) for _ in range(rs.rank))
        k = rng.randint(1, 3)
        c = demazure_character(rs, mu, k)
        assert all(mult > 0 for mult in c.terms.values())
        assert all(g >= 0 and lvl == k for (_, lvl, g) in c.terms)
        assert c.coefficient(mu, k, 0) == 1


def test_parabolic_character_dims():
    assert finite_character(A1, (3,)).dimension() == 4
    assert finite_character(A2, (1, 0)).dimension() == 3
    assert finite_character(A2, (1, 1)).dimension() == 8
    assert finite_character(C2, (1, 0)).dimension() == 4
    assert finite_character(C2, (0, 1)).dimension() == 5
    assert finite_character(C2, (1, 1)).dimension() == 16
    assert finite_character(B2, (0, 1)).dimension() == 4  # spin
    # single node inside a bigger system
    c = parabolic_character(A2, (2, -1), (1,))
    assert c.dimension() == 3
    with pytest.raises(ValueError):
        parabolic_character(A2, (-1, 0), (1,))


def test_parabolic_character_is_weyl_symmetric():
    for lam in itertools.product(range(3), repeat=2):
        c = finite_character(C2, lam)
        for i in (1, 2):
            reflected = {(tuple(C2.reflect(i, fin)), lvl, g): m
                         for (fin, lvl, g), m in c.terms.items()}
            assert GradedCharacter(reflected) == c


def test_g0_branch_frozen_example():
    c = demazure_character(A2, (1, -2), 2)
    recs = g0_branch(A2, c, (2,))
    assert {(r.finite, r.multiplicity, r.dimension) for r in recs} == {
        ((1, 1), 1, 2), ((-1, 2), 1, 3)}
    # full-node branching fails here: the slice is not stable under node 1
    with pytest.raises(ValueError):
        g0_branch(A2, c, (1, 2))


def test_g0_branch_empty_nodes_gives_singletons():
    c = demazure_character(A2, (1, -2), 2)
    recs = g0_branch(A2, c, ())
    assert len(recs) == 5
    assert all(r.dimension == 1 and r.multiplicity == 1 for r in recs)


def test_g0_branch_antidominant_full_nodes():
    c = demazure_character(A1, (-2,), 1)
    recs = g0_branch(A1, c, (1,))
    assert {(r.finite, r.grade, r.dimension) for r in recs} == {
        ((2,), 0, 3), ((0,), 1, 1)}
    c = demazure_character(A2, (-1, -1), 1)
    recs = g0_branch(A2, c, (1, 2))
    assert {(r.finite, r.grade, r.dimension) for r in recs} == {
        ((1, 1), 0, 8), ((0, 0), 1, 1)}


def test_g0_branch_recovers_full_irreducible():
    rng = random.Random(15)
    for rs in (A2, C2):
        for _ in range(10):
            lam = tuple(rng.randint(0, 2) for _ in range(rs.rank))
            c = finite_character(rs, lam)
            recs = g0_branch(rs, c, range(1, rs.rank + 1))
            assert len(recs) == 1
            assert recs[0].finite == lam and recs[0].multiplicity == 1
            assert recs[0].dimension == c.dimension()
            # branching to a single node partitions the dimension
            sub = g0_branch(rs, c, (1,))
            assert sum(r.multiplicity * r.dimension for r in sub) == c.dimension()


def test_embedding_certificate_frozen():
    cert = embedding_certificate(A2, (1, -2), ((0, -1), (1, -1)), 1)
    assert cert.certified and cert.split_admissible
    assert cert.verdict() == "Certified"
    assert cert.failures == ()
    assert cert.k == 2
    assert cert.lhs.dimension() == 5 and cert.rhs.dimension() == 6


def test_embedding_certificate_inadmissible_flag():
    cert = embedding_certificate(C2, (2, 1), ((1, 1), (1, 0)), 1)
    assert not cert.split_admissible
    cert2 = embedding_certificate(C2, (2, 1), ((1, 1), (1, 0)), 2)
    assert cert2.split_admissible and cert2.certified
    cert3 = embedding_certificate(C2, (2, 1), ((2, 0), (0, 1)), 1)
    assert cert3.split_admissible and cert3.certified


def test_embedding_certificate_balanced_grid():
    rng = random.Random(16)
    for _ in range(12):
        rs = [A1, A2, C2][rng.randrange(3)]
        mu = tuple(rng.randint(-2, 2) for _ in range(rs.rank))
        k = rng.randint(2, 3)
        r = rng.randint(1, 2)
        split = balanced_split(rs, mu, k)
        cert = embedding_certificate(rs, mu, split, r)
        if cert.split_admissible:
            assert cert.certified, (rs.family, mu, k, r, split, cert.failures)
