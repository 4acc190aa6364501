"""Structure of the factorization congruence: R-classes, Betti elements,
finite generating sets, master relations, and the mu invariant.

Irredundant factorization relations are identified with kernel-lattice
vectors: (z1, z2) with disjoint supports corresponds to c = z1 - z2, and
conversely c+ and c- are factorizations of the same monoid element because
the presentation embeds the monoid in its ambient group (cancellativity).
That identification is this module's load-bearing lemma and is property
tested against the enumerator.

A finite generating set of the congruence is computed as in lattice-ideal
theory: the kernel basis binomials are saturated by every variable (graded
reverse-lex rounds, one variable cheapest at a time), which turns a lattice
basis into a set of moves connecting every fiber Z(x).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import BoundTooSmallWarning, ElementNotInMonoid, PropertyAssertionError
from .factorizations import Factorization, factorizations_raw
from .intlinalg import Vec
from .presentation import MonoidPresentation, enumerate_elements

Mono = tuple[int, ...]


@dataclass(frozen=True)
class RelationVector:
    """An irredundant relation (c+, c-) stored as the vector c = c+ - c-.

    Normalized so that the balance sum(c) is positive, or zero with the
    first nonzero entry positive.
    """

    vector: Vec

    @classmethod
    def from_vector(cls, c: Sequence[int]) -> "RelationVector":
        c = tuple(c)
        s = sum(c)
        if s < 0 or (s == 0 and next((x for x in c if x), 0) < 0):
            c = tuple(-x for x in c)
        return cls(c)

    @property
    def positive(self) -> Mono:
        return tuple(x if x > 0 else 0 for x in self.vector)

    @property
    def negative(self) -> Mono:
        return tuple(-x if x < 0 else 0 for x in self.vector)

    @property
    def balance(self) -> int:
        return sum(self.vector)

    def element_of(self, p: MonoidPresentation) -> Vec:
        return p.element_of(self.positive)


@dataclass(frozen=True)
class MasterRelation:
    """Unbalanced relation (w1, w2), |w1| < |w2|, generating the congruence."""

    w1: Factorization
    w2: Factorization

    @property
    def lengths(self) -> tuple[int, int]:
        return (self.w1.length, self.w2.length)

    def element_of(self, p: MonoidPresentation) -> Vec:
        return p.element_of(self.w1.exponents)


@dataclass(frozen=True)
class BettiSet:
    elements: tuple[Vec, ...]
    exactness: str  # "certified" | "bounded-sweep"
    bound_used: int | None = None
    boundary_warning: bool = False


def r_classes(p: MonoidPresentation, x: Sequence[int]) -> list[list[Factorization]]:
    """Partition of Z(x) into R-classes (components of the common-atom graph)."""
    zs = factorizations_raw(p, x)
    return [[Factorization(z) for z in part] for part in _r_classes_raw(zs)]


def _r_classes_raw(zs: list[Mono]) -> list[list[Mono]]:
    n = len(zs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if any(a and b for a, b in zip(zs[i], zs[j])):
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[Mono]] = {}
    for i, z in enumerate(zs):
        groups.setdefault(find(i), []).append(z)
    return [groups[r] for r in sorted(groups, key=lambda r: groups[r][0], reverse=True)]


def mu(p: MonoidPresentation, x: Sequence[int]) -> int:
    """max over R-classes of the minimum factorization length in the class."""
    classes = _r_classes_raw(factorizations_raw(p, x))
    if not classes:
        raise ElementNotInMonoid(f"{tuple(x)} has no factorizations")
    return max(min(sum(z) for z in part) for part in classes)


def master_relation(p: MonoidPresentation) -> MasterRelation | None:
    """The master relation of a proper length-factorial presentation.

    Present exactly when the kernel lattice has rank 1 with unbalanced
    generator c and Z(pi(c+)) = {c+, c-}; in a positively graded presentation
    the last condition is automatic, but it is re-verified as part of the
    certificate.
    """
    if p.kernel.rank != 1:
        return None
    c = RelationVector.from_vector(p.kernel.vectors[0])
    if c.balance == 0:
        return None
    fibre = factorizations_raw(p, c.element_of(p))
    if sorted(fibre) != sorted((c.positive, c.negative)):
        return None
    shorter, longer = sorted((c.positive, c.negative), key=lambda z: (sum(z), z))
    return MasterRelation(Factorization(shorter), Factorization(longer))


# ---------------------------------------------------------------------------
# Binomial completion (congruence generating sets)
# ---------------------------------------------------------------------------


def _order_key(weights: Sequence[int], last_var: int) -> Callable[[Mono], tuple]:
    # Graded reverse lexicographic with ``last_var`` cheapest: compare the
    # weighted degree, then exponents from the cheap end, negated.
    k = len(weights)
    tail = [last_var] + [j for j in range(k - 1, -1, -1) if j != last_var]

    def key(m: Mono) -> tuple:
        return (sum(w * e for w, e in zip(weights, m)),) + tuple(-m[j] for j in tail)

    return key


def _grlex_key(weights: Sequence[int]) -> Callable[[Mono], tuple]:
    def key(m: Mono) -> tuple:
        return (sum(w * e for w, e in zip(weights, m)),) + tuple(m)

    return key


def _divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_sub_add(m: Mono, sub: Mono, add: Mono) -> Mono:
    return tuple(x - s + a for x, s, a in zip(m, sub, add))


def _normal_form(lead: Mono, trail: Mono, basis: list[tuple[Mono, Mono]], key) -> tuple[Mono, Mono] | None:
    while True:
        if lead == trail:
            return None
        if key(lead) < key(trail):
            lead, trail = trail, lead
        reduced = False
        for bl, bt in basis:
            if _divides(bl, lead):
                lead = _mono_sub_add(lead, bl, bt)
                reduced = True
                break
        if reduced:
            continue
        for bl, bt in basis:
            if _divides(bl, trail):
                trail = _mono_sub_add(trail, bl, bt)
                reduced = True
                break
        if not reduced:
            return lead, trail


def _buchberger(gens: list[tuple[Mono, Mono]], key) -> list[tuple[Mono, Mono]]:
    basis: list[tuple[Mono, Mono]] = []
    for lead, trail in gens:
        if lead == trail:
            continue
        if key(lead) < key(trail):
            lead, trail = trail, lead
        basis.append((lead, trail))
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop(0)
        li, ti = basis[i]
        lj, tj = basis[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading terms: S-pair reduces to zero
        m = tuple(max(a, b) for a, b in zip(li, lj))
        cand = _normal_form(_mono_sub_add(m, li, ti), _mono_sub_add(m, lj, tj), basis, key)
        if cand is None:
            continue
        basis.append(cand)
        pairs.extend((t, len(basis) - 1) for t in range(len(basis) - 1))
    # Inter-reduce: drop members whose lead another lead divides (ties keep
    # the earliest), then put the surviving trails in normal form.
    minimal: list[tuple[Mono, Mono]] = []
    for idx, (lead, trail) in enumerate(basis):
        keep = True
        for t, (lo, _) in enumerate(basis):
            if t == idx:
                continue
            if _divides(lo, lead) and (lo != lead or t < idx):
                keep = False
                break
        if keep:
            minimal.append((lead, trail))
    reduced: list[tuple[Mono, Mono]] = []
    for idx, (lead, trail) in enumerate(minimal):
        rest = minimal[:idx] + minimal[idx + 1:]
        nf = _normal_form(lead, trail, rest, key) if rest else (lead, trail)
        if nf is not None:
            reduced.append(nf)
    return reduced


def _strip_common(lead: Mono, trail: Mono, var: int | None = None) -> tuple[Mono, Mono]:
    if var is None:
        common = tuple(min(a, b) for a, b in zip(lead, trail))
    else:
        common = tuple(min(a, b) if j == var else 0 for j, (a, b) in enumerate(zip(lead, trail)))
    if not any(common):
        return lead, trail
    return (tuple(a - c for a, c in zip(lead, common)),
            tuple(b - c for b, c in zip(trail, common)))


def kernel_generating_set(p: MonoidPresentation) -> tuple[RelationVector, ...]:
    """A finite set of relation vectors generating the factorization congruence.

    Saturates the kernel-basis binomials by every variable in turn (the
    homogeneous grading makes each graded reverse-lex round compute the
    colon ideal exactly), then canonicalizes under graded-lex.
    """
    k = p.atom_count
    if p.kernel.is_zero():
        return ()
    weights = p.atom_gradings
    rvs = [RelationVector.from_vector(c) for c in p.kernel.vectors]
    gens = [(r.positive, r.negative) for r in rvs]
    for var in range(k):
        key = _order_key(weights, var)
        gens = _buchberger(gens, key)
        gens = [_strip_common(lead, trail, var) for lead, trail in gens]
    gens = _buchberger(gens, _grlex_key(weights))
    gens = [_strip_common(lead, trail) for lead, trail in gens]
    rels = {RelationVector.from_vector(tuple(a - b for a, b in zip(lead, trail)))
            for lead, trail in gens if lead != trail}
    return tuple(sorted(rels, key=lambda r: (p.grading.value(r.element_of(p), p.ambient), r.vector)))


def congruence_connects(p: MonoidPresentation, relations: Sequence[RelationVector],
                        bound: int) -> bool:
    """Do the given relations connect every fiber Z(x) with grading <= bound?

    This is the bounded-sweep verification that a candidate set generates the
    congruence: single steps subtract one side of a relation and add the
    other, and generation is equivalent to every fiber being one component.
    """
    moves = [(r.positive, r.negative) for r in relations]
    for x in enumerate_elements(p, bound):
        zs = factorizations_raw(p, x)
        if len(zs) < 2:
            continue
        index = {z: i for i, z in enumerate(zs)}
        parent = list(range(len(zs)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for z in zs:
            for pos, neg in moves:
                if _divides(pos, z):
                    w = _mono_sub_add(z, pos, neg)
                    ri, rj = find(index[z]), find(index[w])
                    if ri != rj:
                        parent[ri] = rj
        if len({find(i) for i in range(len(zs))}) > 1:
            return False
    return True


def betti_elements(p: MonoidPresentation, strategy: str = "certified",
                   bound: int | None = None) -> BettiSet:
    """Betti elements: x with at least two R-classes in Z(x).

    "certified": exact; every congruence generating set must carry, at each
    Betti element, a relation joining two of its R-classes, so the candidates
    are the generating relations' elements, filtered by an exact R-class
    count.  "sweep": bounded enumeration cross-check.
    """
    if strategy == "certified":
        candidates = sorted({r.element_of(p) for r in kernel_generating_set(p)},
                            key=lambda v: (p.grading.value(v, p.ambient), v))
        betti = tuple(x for x in candidates
                      if len(_r_classes_raw(factorizations_raw(p, x))) >= 2)
        return BettiSet(betti, "certified")
    if strategy != "sweep":
        raise PropertyAssertionError(f"unknown Betti strategy {strategy!r}")
    if bound is None or bound < 0:
        raise ElementNotInMonoid("sweep strategy needs a bound >= 0")
    betti = []
    touching = False
    max_atom = max(p.atom_gradings, default=1)
    for x in enumerate_elements(p, bound):
        zs = factorizations_raw(p, x)
        if len(zs) >= 2 and len(_r_classes_raw(zs)) >= 2:
            betti.append(x)
            if p.grading.value(x, p.ambient) + max_atom > bound:
                touching = True
    if touching:
        warnings.warn("Betti sweep found relations touching the bound; "
                      "raise the bound or use the certified strategy",
                      BoundTooSmallWarning, stacklevel=2)
    return BettiSet(tuple(betti), "bounded-sweep", bound, touching)
