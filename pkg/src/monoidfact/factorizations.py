"""Complete factorization enumeration, length sets, and the distance metric.

The factorization set Z(x) is computed by depth-first bounded knapsack over
the canonical atom list; the strictly positive grading bounds every exponent,
so termination is guaranteed and the set is finite and complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError
from .intlinalg import Vec
from .presentation import MonoidPresentation


@dataclass(frozen=True, order=True)
class Factorization:
    """Exponent vector over the atom list; length is the exponent sum."""

    exponents: tuple[int, ...]

    @property
    def length(self) -> int:
        return sum(self.exponents)

    def __iter__(self):
        return iter(self.exponents)


@dataclass(frozen=True)
class FactorizationSet:
    """All factorizations of one element, in descending lexicographic order."""

    element: Vec
    factorizations: tuple[Factorization, ...]

    def __len__(self) -> int:
        return len(self.factorizations)

    def __iter__(self):
        return iter(self.factorizations)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(sorted({z.length for z in self.factorizations}))


def factorizations_raw(p: MonoidPresentation, x: Sequence[int]) -> list[tuple[int, ...]]:
    """Z(x) as raw exponent tuples, descending lexicographic."""
    x = p.ambient.canon(x)
    k = p.atom_count
    if x == p.ambient.zero:
        return [(0,) * k]
    if k == 0:
        return []
    gradings = p.atom_gradings
    t = len(p.ambient.torsion)
    d = p.ambient.free_rank
    # Sign pruning: if every remaining atom is >= 0 (resp. <= 0) in a free
    # coordinate, a residual of the opposite sign there is unreachable.
    nonneg = [[all(a[t + c] >= 0 for a in p.atoms[i:]) for c in range(d)] for i in range(k + 1)]
    nonpos = [[all(a[t + c] <= 0 for a in p.atoms[i:]) for c in range(d)] for i in range(k + 1)]
    out: list[tuple[int, ...]] = []
    exps = [0] * k

    def walk(i: int, residual: Vec, budget: int) -> None:
        if i == k:
            if residual == p.ambient.zero:
                out.append(tuple(exps))
            return
        for c in range(d):
            rc = residual[t + c]
            if (rc < 0 and nonneg[i][c]) or (rc > 0 and nonpos[i][c]):
                return
        if i == k - 1 and residual != p.ambient.zero and t == 0:
            # Last atom: the exponent is forced by any nonzero free coordinate.
            a = p.atoms[i]
            c = next((j for j in range(d) if a[j]), None)
            if c is not None:
                if residual[c] % a[c]:
                    return
                e = residual[c] // a[c]
                if 0 <= e * gradings[i] <= budget and p.ambient.scale(e, a) == residual:
                    exps[i] = e
                    walk(k, p.ambient.zero, 0)
                    exps[i] = 0
                return
        a = p.atoms[i]
        emax = budget // gradings[i]
        r = p.ambient.sub(residual, p.ambient.scale(emax, a))
        for e in range(emax, -1, -1):
            exps[i] = e
            walk(i + 1, r, budget - e * gradings[i])
            r = p.ambient.add(r, a)
        exps[i] = 0

    walk(0, x, p.grading.value(x, p.ambient))
    out.sort(reverse=True)
    return out


def factorizations(p: MonoidPresentation, x: Sequence[int]) -> FactorizationSet:
    """The complete finite set Z(x); empty iff x is not in the monoid."""
    raw = factorizations_raw(p, x)
    return FactorizationSet(p.ambient.canon(x), tuple(Factorization(e) for e in raw))


def member(p: MonoidPresentation, x: Sequence[int]) -> bool:
    return bool(factorizations_raw(p, x))


def length_set(p: MonoidPresentation, x: Sequence[int]) -> tuple[int, ...]:
    """L(x) = { |z| : z in Z(x) }, sorted."""
    return tuple(sorted({sum(e) for e in factorizations_raw(p, x)}))


def distance(z: Factorization | Sequence[int], zp: Factorization | Sequence[int]) -> int:
    """max(|z / gcd(z, z')|, |z' / gcd(z, z')|) on exponent vectors."""
    a = tuple(z.exponents if isinstance(z, Factorization) else z)
    b = tuple(zp.exponents if isinstance(zp, Factorization) else zp)
    if len(a) != len(b):
        raise InputError("factorizations live over different atom lists")
    rest_a = rest_b = 0
    for x, y in zip(a, b):
        m = x if x < y else y
        rest_a += x - m
        rest_b += y - m
    return rest_a if rest_a > rest_b else rest_b
