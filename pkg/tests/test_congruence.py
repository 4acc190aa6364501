import pytest

from monoidfact.congruence import (
    RelationVector,
    betti_elements,
    congruence_connects,
    kernel_generating_set,
    master_relation,
    mu,
    r_classes,
)
from monoidfact.errors import BoundTooSmallWarning, ElementNotInMonoid
from monoidfact.fixtures import presentation
from monoidfact.presentation import MonoidSpec, enumerate_elements, normalize_spec

from oracles import relation_holds


@pytest.fixture(scope="module")
def n23():
    return presentation("N23")


@pytest.fixture(scope="module")
def mn3():
    return presentation("MN3")


def free_monoid():
    return normalize_spec(MonoidSpec("affine", ((1, 0), (0, 1))))


def test_relation_vector_normalization():
    r = RelationVector.from_vector((-3, 2))
    assert r.vector == (3, -2)
    assert r.positive == (3, 0) and r.negative == (0, 2)
    assert r.balance == 1
    balanced = RelationVector.from_vector((-1, 2, -1))
    assert balanced.vector == (1, -2, 1)


def test_r_classes_six_is_split(n23):
    classes = r_classes(n23, (6,))
    assert sorted(sorted(z.exponents for z in cl) for cl in classes) == [[(0, 2)], [(3, 0)]]


def test_r_classes_twelve_is_connected(n23):
    assert len(r_classes(n23, (12,))) == 1


def test_r_classes_singleton(n23):
    assert len(r_classes(n23, (2,))) == 1


def test_mu(n23):
    assert mu(n23, (6,)) == 3
    assert mu(n23, (12,)) == 4
    assert mu(n23, (2,)) == 1
    with pytest.raises(ElementNotInMonoid):
        mu(n23, (1,))


def test_master_relation(n23, mn3):
    m = master_relation(n23)
    assert m.w1.exponents == (0, 2) and m.w2.exponents == (3, 0)
    assert m.lengths == (2, 3)
    assert master_relation(mn3) is None
    assert master_relation(free_monoid()) is None


def test_generating_set_two_generated(n23):
    assert [r.vector for r in kernel_generating_set(n23)] == [(3, -2)]


def test_generating_set_free():
    assert kernel_generating_set(free_monoid()) == ()


def test_generating_set_interval(mn3):
    gens = kernel_generating_set(mn3)
    assert len(gens) >= 2
    directions = set()
    for r in gens:
        assert relation_holds(mn3, r.vector)
        g = 0
        for x in r.vector:
            g = abs(x) if g == 0 else _gcd(g, abs(x))
        directions.add(tuple(x // g for x in r.vector))
    assert len(directions) >= 2  # not all proportional: the congruence is not cyclic


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def test_generating_sets_connect_all_fibers():
    for fid in ("N23", "MN3", "M1", "M3", "T4", "E46"):
        p = presentation(fid)
        gens = kernel_generating_set(p)
        bound = 4 * max(p.atom_gradings)
        assert congruence_connects(p, gens, bound), fid


def test_lattice_basis_alone_does_not_connect():
    # the raw kernel basis of <3,4,5> cannot move inside Z(8) at all;
    # completion is what certifies generation
    p = presentation("MN3")
    basis_only = [RelationVector.from_vector(c) for c in p.kernel.vectors]
    assert not congruence_connects(p, basis_only, 20)
    assert congruence_connects(p, kernel_generating_set(p), 20)


def test_betti_certified(n23, mn3):
    assert betti_elements(n23, "certified").elements == ((6,),)
    assert betti_elements(mn3, "certified").elements == ((8,), (9,), (10,))
    assert betti_elements(free_monoid(), "certified").elements == ()


def test_betti_single_for_proper_lf():
    o = normalize_spec(MonoidSpec("affine", ((1, 1), (2, 1), (3, 0))))
    betti = betti_elements(o, "certified")
    assert len(betti.elements) == 1


def test_betti_sweep_agrees(n23, mn3):
    for p in (n23, mn3):
        certified = betti_elements(p, "certified")
        sweep = betti_elements(p, "sweep", 30)
        inside = tuple(b for b in certified.elements
                       if p.grading.value(b, p.ambient) <= 30)
        assert sweep.elements == inside
        assert sweep.exactness == "bounded-sweep"


def test_betti_sweep_warns_at_boundary(n23):
    with pytest.warns(BoundTooSmallWarning):
        betti_elements(n23, "sweep", 6)


def test_relation_correspondence():
    # every kernel vector splits into two factorizations of one element
    from monoidfact.factorizations import factorizations_raw

    for fid in ("N23", "MN3", "T4", "E46"):
        p = presentation(fid)
        for c in p.kernel.vectors:
            r = RelationVector.from_vector(c)
            fibre = factorizations_raw(p, r.element_of(p))
            assert r.positive in fibre and r.negative in fibre


def test_generated_relations_stay_in_kernel():
    for fid in ("MN3", "M1", "T4"):
        p = presentation(fid)
        for r in kernel_generating_set(p):
            assert p.kernel.member(r.vector)
            assert relation_holds(p, r.vector)
