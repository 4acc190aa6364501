import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoidfact.factorizations import distance, factorizations, factorizations_raw, length_set
from monoidfact.fixtures import presentation
from monoidfact.presentation import MonoidSpec, normalize_spec

from oracles import element_sum, naive_factorizations, naive_length_set


@pytest.fixture(scope="module")
def n23():
    return presentation("N23")


@pytest.fixture(scope="module")
def mn3():
    return presentation("MN3")


def test_factorizations_of_six(n23):
    assert [z.exponents for z in factorizations(n23, (6,))] == [(3, 0), (0, 2)]


def test_factorizations_of_eight(mn3):
    assert [z.exponents for z in factorizations(mn3, (8,))] == [(1, 0, 1), (0, 2, 0)]


def test_zero_has_the_empty_factorization(n23):
    zs = factorizations(n23, (0,))
    assert [z.exponents for z in zs] == [(0, 0)]
    assert length_set(n23, (0,)) == (0,)


def test_gap_has_no_factorization(n23):
    assert len(factorizations(n23, (1,))) == 0


def test_length_sets(n23, mn3):
    assert length_set(n23, (6,)) == (2, 3)
    assert length_set(mn3, (8,)) == (2,)


def test_soundness(n23):
    for z in factorizations_raw(n23, (30,)):
        assert element_sum(n23, z) == (30,)


def test_completeness_against_naive_oracle():
    for fid in ("N23", "MN3", "M1", "T4"):
        p = presentation(fid)
        from monoidfact.presentation import enumerate_elements

        for x in enumerate_elements(p, 12):
            assert set(factorizations_raw(p, x)) == naive_factorizations(p, x), (fid, x)
            assert set(length_set(p, x)) == naive_length_set(p, x)


def test_torsion_fiber(n23):
    t4 = presentation("T4")
    # 6 on the free line of the torsion example: 2+2+2 = 3+3 both with zero
    # torsion part
    zs = factorizations_raw(t4, (0, 0, 6))
    a1 = t4.atoms.index((0, 0, 2))
    a2 = t4.atoms.index((0, 0, 3))
    expected = set()
    z = [0] * 4
    z[a1] = 3
    expected.add(tuple(z))
    z = [0] * 4
    z[a2] = 2
    expected.add(tuple(z))
    assert set(zs) == expected


def test_distance_examples():
    assert distance((3, 0), (3, 0)) == 0
    assert distance((3, 0), (0, 2)) == 3
    assert distance((1, 0, 1), (0, 2, 0)) == 2
    # shared part is removed before taking lengths
    assert distance((4, 1), (1, 3)) == 3


exps = st.lists(st.integers(0, 8), min_size=3, max_size=3).map(tuple)


@given(exps, exps)
@settings(max_examples=200)
def test_distance_symmetry_and_separation(z1, z2):
    assert distance(z1, z2) == distance(z2, z1)
    assert (distance(z1, z2) == 0) == (z1 == z2)


@given(exps, exps, exps)
@settings(max_examples=200)
def test_distance_triangle_inequality(z1, z2, z3):
    assert distance(z1, z3) <= distance(z1, z2) + distance(z2, z3)


@given(exps, exps)
@settings(max_examples=200)
def test_distance_dominates_length_gap(z1, z2):
    assert distance(z1, z2) >= abs(sum(z1) - sum(z2))


def test_random_affine_monoids_match_oracle():
    rng = random.Random(424242)
    from monoidfact.presentation import enumerate_elements

    for _ in range(25):
        d = rng.randint(1, 2)
        gens = []
        while len(gens) < rng.randint(1, 4):
            v = tuple(rng.randint(0, 4) for _ in range(d))
            if any(v):
                gens.append(v)
        p = normalize_spec(MonoidSpec("affine", tuple(gens)))
        for x in enumerate_elements(p, 8):
            assert set(factorizations_raw(p, x)) == naive_factorizations(p, x)
