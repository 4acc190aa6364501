"""Canonical reduced presentations of finitely generated cancellative monoids.

A presentation normalizes user input (numerical, Puiseux, affine, affine with
torsion) into: an ambient group prod Z/m_j x Z^d, the atom list, the integer
kernel lattice of the atoms, and a strictly positive grading certifying that
element enumeration terminates.

Inputs are assumed to present REDUCED monoids (trivial unit group); monoids
with units must be quotiented by their unit group before being fed in.
Ambient vectors list the torsion coordinates first, then the free ones.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import (
    EmptyGenerators,
    InputError,
    NonPositivePuiseuxGenerator,
    NotPointed,
)
from .intlinalg import LatticeBasis, Vec, integer_kernel, rational_rank
from .rationallp import feasible_geq_one


@dataclass(frozen=True)
class AmbientGroup:
    """The group prod_j Z/m_j x Z^free_rank housing the monoid."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0 or any(m < 2 for m in self.torsion):
            raise InputError("ambient group needs free_rank >= 0 and moduli >= 2")
        if self.free_rank + len(self.torsion) < 1:
            raise InputError("ambient group must have positive dimension")

    @property
    def dim(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def zero(self) -> Vec:
        return (0,) * self.dim

    def canon(self, v: Sequence[int]) -> Vec:
        if len(v) != self.dim:
            raise InputError(f"vector {tuple(v)} does not match ambient dimension {self.dim}")
        t = len(self.torsion)
        return tuple(v[i] % self.torsion[i] for i in range(t)) + tuple(v[t:])

    def add(self, a: Sequence[int], b: Sequence[int]) -> Vec:
        return self.canon([x + y for x, y in zip(a, b)])

    def sub(self, a: Sequence[int], b: Sequence[int]) -> Vec:
        return self.canon([x - y for x, y in zip(a, b)])

    def scale(self, n: int, a: Sequence[int]) -> Vec:
        return self.canon([n * x for x in a])

    def free_part(self, v: Sequence[int]) -> Vec:
        return tuple(v[len(self.torsion):])


@dataclass(frozen=True)
class Grading:
    """Integer functional on the free part, >= 1 on every atom."""

    weights: tuple[int, ...]

    def value(self, v: Sequence[int], ambient: AmbientGroup) -> int:
        free = v[len(ambient.torsion):]
        return sum(w * x for w, x in zip(self.weights, free))


@dataclass(frozen=True)
class MonoidSpec:
    """Raw user specification before normalization.

    kind "numerical": generators are positive ints.
    kind "puiseux":   generators are positive rationals (Fraction or str "3/4").
    kind "affine":    generators are vectors in Z^d.
    kind "affine_torsion": vectors in prod Z/m_j x Z^d, torsion coords first.
    kind "krull": the generators slot carries a prime-distribution document.
    """

    kind: str
    generators: tuple
    ambient: AmbientGroup | None = None

    KINDS = ("numerical", "puiseux", "affine", "affine_torsion", "krull")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise InputError(f"unknown monoid kind {self.kind!r}")


@dataclass(frozen=True)
class MonoidPresentation:
    """Atoms + ambient + kernel lattice + positive grading, all canonical.

    Atoms are pairwise distinct, none is a sum of two nonzero monoid
    elements, and they are sorted by (grading value, vector).  ``scale``
    records the lcm of denominators for presentations that came from a
    rational (Puiseux) spec, so invariants can be reported in the original
    coordinates.
    """

    ambient: AmbientGroup
    atoms: tuple[Vec, ...]
    kernel: LatticeBasis
    grading: Grading
    dropped_generators: tuple[Vec, ...] = ()
    scale: int = 1

    @property
    def atom_count(self) -> int:
        return len(self.atoms)

    @property
    def atom_gradings(self) -> tuple[int, ...]:
        return tuple(self.grading.value(a, self.ambient) for a in self.atoms)

    def element_of(self, exponents: Sequence[int]) -> Vec:
        x = self.ambient.zero
        for e, a in zip(exponents, self.atoms):
            if e:
                x = self.ambient.add(x, self.ambient.scale(e, a))
        return x


def find_grading(vectors: Sequence[Vec], ambient: AmbientGroup) -> Grading:
    """Integer functional positive on all free parts, or NotPointed.

    Tries the all-ones functional first (it certifies every monoid living in
    N^d); otherwise solves the dual-cone feasibility exactly over Q and
    clears denominators.
    """
    d = ambient.free_rank
    frees = [ambient.free_part(v) for v in vectors]
    if not frees:
        return Grading((1,) * d)
    if all(sum(f) >= 1 for f in frees):
        return Grading((1,) * d)
    if d == 0:
        raise NotPointed("ambient group has no free part to grade")
    sol = feasible_geq_one(frees, d)
    if sol is None:
        raise NotPointed("no strictly positive grading exists for these generators")
    denom = lcm(*(f.denominator for f in sol)) if sol else 1
    weights = tuple(int(f * denom) for f in sol)
    assert all(sum(w * x for w, x in zip(weights, f)) >= 1 for f in frees)
    return Grading(weights)


def enumerate_elements(p: MonoidPresentation, bound: int) -> list[Vec]:
    """All monoid elements with grading <= bound, sorted by (grading, vector)."""
    if bound < 0:
        raise InputError("bound must be >= 0")
    seen = {p.ambient.zero}
    frontier = [p.ambient.zero]
    gradings = {p.ambient.zero: 0}
    while frontier:
        nxt = []
        for x in frontier:
            gx = gradings[x]
            for a, ga in zip(p.atoms, p.atom_gradings):
                g = gx + ga
                if g > bound:
                    continue
                y = p.ambient.add(x, a)
                if y not in seen:
                    seen.add(y)
                    gradings[y] = g
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda v: (gradings[v], v))


def compute_atoms(generators: Sequence[Vec], ambient: AmbientGroup,
                  grading: Grading) -> tuple[list[Vec], list[Vec]]:
    """Split generators into (atoms, dropped).

    g is an atom iff g != x + y for nonzero x, y in the generated monoid;
    decided by enumerating monoid elements with grading below grading(g).
    """
    gens = sorted(set(ambient.canon(g) for g in generators),
                  key=lambda v: (grading.value(v, ambient), v))
    probe = MonoidPresentation(ambient, tuple(gens), LatticeBasis(len(gens), ()),
                               grading)
    atoms, dropped = [], []
    cache: dict[int, set[Vec]] = {}
    for g in gens:
        gg = grading.value(g, ambient)
        if gg - 1 not in cache:
            cache[gg - 1] = set(enumerate_elements(probe, gg - 1))
        elements = cache[gg - 1]
        decomposable = False
        for x in elements:
            if x == ambient.zero:
                continue
            y = ambient.sub(g, x)
            if y != ambient.zero and y in elements:
                decomposable = True
                break
        (dropped if decomposable else atoms).append(g)
    return atoms, dropped


def presentation_from_atoms(atoms: Iterable[Vec], ambient: AmbientGroup,
                            dropped: Sequence[Vec] = (), scale: int = 1,
                            grading: Grading | None = None) -> MonoidPresentation:
    """Assemble a presentation from vectors already known to be atoms."""
    if grading is None:
        grading = find_grading(tuple(atoms), ambient)
    ordered = tuple(sorted(set(atoms), key=lambda v: (grading.value(v, ambient), v)))
    for a in ordered:
        if grading.value(a, ambient) < 1:
            raise NotPointed(f"generator {a} has non-positive grading")
    kernel = integer_kernel(ordered, ambient.torsion)
    return MonoidPresentation(ambient, ordered, kernel, grading,
                              tuple(dropped), scale)


def normalize_spec(spec: MonoidSpec) -> MonoidPresentation:
    """Normalize any supported spec into a canonical reduced presentation."""
    if spec.kind == "krull":
        from . import krull

        return krull.to_presentation(krull.distribution_from_document(spec.generators))
    if not spec.generators:
        raise EmptyGenerators("monoid specification has no generators")
    scale = 1
    if spec.kind in ("numerical", "puiseux"):
        values = [Fraction(g) for g in spec.generators]
        if any(v <= 0 for v in values):
            raise NonPositivePuiseuxGenerator(f"generators must be positive: {values}")
        scale = lcm(*(v.denominator for v in values))
        vectors = [(int(v * scale),) for v in values]
        ambient = AmbientGroup(1)
    elif spec.kind == "affine":
        ambient = spec.ambient or AmbientGroup(len(spec.generators[0]))
        if ambient.torsion:
            raise InputError("affine specs are torsion-free; use affine_torsion")
        vectors = [ambient.canon(g) for g in spec.generators]
    else:  # affine_torsion
        if spec.ambient is None:
            raise InputError("affine_torsion specs must declare their ambient group")
        ambient = spec.ambient
        vectors = [ambient.canon(g) for g in spec.generators]
    if any(v == ambient.zero for v in vectors):
        raise InputError("generators must be nonzero")
    grading = find_grading(vectors, ambient)
    atoms, dropped = compute_atoms(vectors, ambient, grading)
    return presentation_from_atoms(atoms, ambient, dropped, scale, grading)


def gp_rank(p: MonoidPresentation) -> int:
    """Rank of the Q-vector space spanned by the atoms' free parts."""
    if not p.atoms:
        return 0
    frees = [p.ambient.free_part(a) for a in p.atoms]
    rows = [[f[i] for f in frees] for i in range(p.ambient.free_rank)]
    return rational_rank(rows)


def spec_from_document(doc) -> MonoidSpec:
    """Parse the JSON input document {"kind": ..., "generators": ..., "ambient": ...}."""
    if isinstance(doc, (str, bytes)):
        doc = json.loads(doc)
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    if "kind" not in doc:
        raise InputError("input document is missing the field 'kind'")
    kind = doc["kind"]
    if kind == "krull":
        return MonoidSpec("krull", doc.get("distribution", doc))
    if "generators" not in doc:
        raise InputError("input document is missing the field 'generators'")
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise InputError("'generators' must be a nonempty list")
    ambient = None
    if "ambient" in doc:
        amb = doc["ambient"]
        if not isinstance(amb, dict) or "free_rank" not in amb:
            raise InputError("'ambient' must carry 'free_rank' (and optional 'torsion')")
        ambient = AmbientGroup(int(amb["free_rank"]), tuple(int(m) for m in amb.get("torsion", ())))
    if kind in ("numerical", "puiseux"):
        generators = tuple(str(g) if isinstance(g, str) else g for g in gens)
    else:
        try:
            generators = tuple(tuple(int(c) for c in g) for g in gens)
        except (TypeError, ValueError) as exc:
            raise InputError(f"affine generators must be integer vectors: {exc}") from None
    return MonoidSpec(kind, generators, ambient)
