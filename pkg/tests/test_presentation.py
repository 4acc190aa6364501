import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoidfact.errors import (
    EmptyGenerators,
    InputError,
    NonPositivePuiseuxGenerator,
    NotPointed,
)
from monoidfact.presentation import (
    AmbientGroup,
    MonoidSpec,
    enumerate_elements,
    find_grading,
    gp_rank,
    normalize_spec,
    spec_from_document,
)


def numerical(*gens):
    return normalize_spec(MonoidSpec("numerical", gens))


def test_normalize_numerical():
    p = numerical(2, 3)
    assert p.atoms == ((2,), (3,))
    assert p.grading.weights == (1,)
    assert p.scale == 1


def test_normalize_puiseux_scales_by_lcm():
    p = normalize_spec(MonoidSpec("puiseux", ("1/2", "3/4")))
    assert p.atoms == ((2,), (3,))
    assert p.scale == 4


def test_puiseux_and_scaled_integer_spec_share_kernels():
    q = normalize_spec(MonoidSpec("puiseux", ("1/2", "3/4")))
    z = numerical(2, 3)
    assert q.kernel.vectors == z.kernel.vectors
    assert q.atoms == z.atoms


def test_normalize_affine_keeps_all_atoms():
    gens = ((0, 3), (1, 2), (2, 1), (3, 0), (1, 1))
    p = normalize_spec(MonoidSpec("affine", gens))
    assert set(p.atoms) == set(gens)
    assert p.dropped_generators == ()


def test_non_atoms_are_dropped_with_record():
    p = numerical(2, 3, 4)
    assert p.atoms == ((2,), (3,))
    assert p.dropped_generators == ((4,),)


def test_interval_generators_are_all_atoms():
    p = numerical(3, 4, 5)
    assert p.atoms == ((3,), (4,), (5,))


def test_single_free_atom():
    p = normalize_spec(MonoidSpec("affine", ((1, 0),)))
    assert p.atoms == ((1, 0),)
    assert p.kernel.is_zero()


def test_empty_generators_rejected():
    with pytest.raises(EmptyGenerators):
        normalize_spec(MonoidSpec("numerical", ()))


def test_nonpositive_puiseux_rejected():
    with pytest.raises(NonPositivePuiseuxGenerator):
        normalize_spec(MonoidSpec("puiseux", ("-1/2",)))


def test_find_grading_examples():
    assert find_grading([(2,), (3,)], AmbientGroup(1)).weights == (1,)
    g = find_grading([(0, 0, 2), (0, 0, 3), (0, 1, 0), (1, 1, 0)],
                     AmbientGroup(2, (2,)))
    assert g.weights == (1, 1)
    with pytest.raises(NotPointed):
        find_grading([(1,), (-1,)], AmbientGroup(1))


def test_find_grading_mixed_signs():
    # pointed cone not meeting the positive orthant
    g = find_grading([(2, -1), (-1, 2)], AmbientGroup(2))
    assert all(sum(w * c for w, c in zip(g.weights, a)) >= 1
               for a in [(2, -1), (-1, 2)])


def test_enumerate_numerical():
    p = numerical(2, 3)
    elements = [x[0] for x in enumerate_elements(p, 7)]
    assert elements == [0, 2, 3, 4, 5, 6, 7]


def test_enumerate_diagonal():
    from monoidfact.presentation import Grading, presentation_from_atoms

    p = presentation_from_atoms([(1, 1)], AmbientGroup(2), grading=Grading((1, 0)))
    assert enumerate_elements(p, 2) == [(0, 0), (1, 1), (2, 2)]


def test_enumerate_bound_zero():
    assert enumerate_elements(numerical(2, 3), 0) == [(0,)]


@given(st.integers(0, 40))
@settings(max_examples=30)
def test_enumerate_two_three_counts_gaps(bound):
    p = numerical(2, 3)
    elements = enumerate_elements(p, bound)
    assert len(set(elements)) == len(elements)
    assert elements == sorted(elements)
    expected = [x for x in range(bound + 1) if x != 1]
    assert [e[0] for e in elements] == expected


def test_atoms_pass_two_summand_test():
    p = numerical(4, 5, 6, 7)
    elements = set(x[0] for x in enumerate_elements(p, 14))
    for a in p.atoms:
        v = a[0]
        assert not any(x != 0 and v - x != 0 and x in elements and (v - x) in elements
                       for x in range(1, v))


def test_gp_rank():
    assert gp_rank(numerical(2, 3)) == 1
    e46 = normalize_spec(MonoidSpec(
        "affine", ((0, 1, 1), (0, 2, 1), (1, 2, 3), (2, 2, 2), (3, 2, 1))))
    assert gp_rank(e46) == 3
    mr2 = normalize_spec(MonoidSpec("affine", ((1, 1), (2, 0), (0, 2))))
    assert gp_rank(mr2) == 2


def test_torsion_canonicalization():
    ambient = AmbientGroup(2, (2,))
    spec = MonoidSpec("affine_torsion", ((3, 1, 0), (0, 0, 2)), ambient)
    p = normalize_spec(spec)
    assert (1, 1, 0) in p.atoms


def test_spec_from_document_roundtrip():
    doc = {"kind": "affine_torsion",
           "generators": [[0, 0, 2], [0, 0, 3], [0, 1, 0], [1, 1, 0]],
           "ambient": {"free_rank": 2, "torsion": [2]}}
    spec = spec_from_document(doc)
    p = normalize_spec(spec)
    # atoms are re-sorted canonically (grading, vector); in that order the
    # kernel pairs 2*(0,1,0) = 2*(1,1,0) with 3*(0,0,2) = 2*(0,0,3)
    assert p.atoms == ((0, 1, 0), (1, 1, 0), (0, 0, 2), (0, 0, 3))
    assert p.kernel.vectors == ((2, -2, 0, 0), (0, 0, 3, -2))


def test_spec_from_document_rejects_garbage():
    with pytest.raises(InputError):
        spec_from_document({"generators": [1]})
    with pytest.raises(InputError):
        spec_from_document({"kind": "affine", "generators": []})
    with pytest.raises(InputError):
        spec_from_document({"kind": "nope", "generators": [1]})
