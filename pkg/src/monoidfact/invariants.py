"""Deciders and numeric invariants: factorial / half-factorial /
length-factorial classification, pure irreducibles, catenary degrees,
the half-factorial + length-factorial decomposition, and the rank-1
(Puiseux) classification.

Length-factoriality is decided by three independent strategies:

* "rank":   search for an atom a such that the other atoms, and the other
            atoms shifted by a, are both integrally independent in the
            ambient group;
* "kernel": the kernel lattice is zero, or it is rank 1 with an unbalanced
            generator whose fiber is exactly the two sides (master relation);
* "brute":  bounded sweep looking for two distinct equal-length
            factorizations of one element.

The pure-irreducible decision reduces to the rank/sign shape of the atom
signature, the image of the kernel lattice under (balance, i-th exponent).
Because that reduction is a derived procedure rather than a verbatim recipe,
a relation-sweep oracle that tests the definition directly is kept alongside
and cross-checked in CI.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .congruence import (
    MasterRelation,
    RelationVector,
    _r_classes_raw,
    betti_elements,
    master_relation,
    mu,
)
from .errors import (
    ElementNotInMonoid,
    InputError,
    NotPLS,
    PropertyAssertionError,
)
from .factorizations import Factorization, distance, factorizations_raw
from .intlinalg import Sublattice2, Vec, image_lattice_2d, integer_kernel
from .presentation import (
    AmbientGroup,
    MonoidPresentation,
    MonoidSpec,
    enumerate_elements,
    gp_rank,
    normalize_spec,
    presentation_from_atoms,
)
from .rationallp import feasible_geq_one


@dataclass(frozen=True)
class Classification:
    factorial: bool
    half_factorial: bool
    length_factorial: bool
    proper_length_factorial: bool
    pls: bool
    atom_count: int
    rank: int
    certificates: dict

    def as_dict(self) -> dict:
        return {
            "factorial": self.factorial,
            "half_factorial": self.half_factorial,
            "length_factorial": self.length_factorial,
            "proper_length_factorial": self.proper_length_factorial,
            "pls": self.pls,
            "atom_count": self.atom_count,
            "rank": self.rank,
            "certificates": self.certificates,
        }


@dataclass(frozen=True)
class CatenaryReport:
    element: Vec
    c: int
    c_eq: int
    c_adj: int
    c_mon: int


@dataclass(frozen=True)
class PureSets:
    purely_long: tuple[int, ...]   # atom indices
    purely_short: tuple[int, ...]
    signatures: tuple[Sublattice2, ...]

    @property
    def is_pls(self) -> bool:
        return bool(self.purely_long) and bool(self.purely_short)


def is_factorial(p: MonoidPresentation) -> bool:
    """Every element factors uniquely iff the kernel lattice is zero."""
    return p.kernel.is_zero()


def balance(c: Sequence[int]) -> int:
    return sum(c)


def is_half_factorial(p: MonoidPresentation) -> bool:
    """All length sets are singletons iff the balance kills the kernel."""
    return all(balance(c) == 0 for c in p.kernel.vectors)


def balanced_kernel_vector(p: MonoidPresentation) -> RelationVector | None:
    """A nonzero balanced kernel vector with a small witness element.

    Any two independent kernel vectors combine into a balanced one, so this
    is None exactly when the kernel is zero or rank 1 with unbalanced
    generator.  The returned vector is the cheapest basis vector of the
    balanced sublattice (kernel meet { balance = 0 }).
    """
    basis = balanced_sublattice_basis(p)
    if not basis:
        return None
    rels = [RelationVector.from_vector(v) for v in basis]
    return min(rels, key=lambda r: (p.grading.value(r.element_of(p), p.ambient), r.vector))


def balanced_sublattice_basis(p: MonoidPresentation) -> tuple[Vec, ...]:
    """Canonical basis of the balanced part of the kernel lattice."""
    from .intlinalg import kernel_basis, lattice_basis_of

    kern = p.kernel.vectors
    if not kern:
        return ()
    combos = kernel_basis([[balance(c) for c in kern]], len(kern))
    vecs = []
    for combo in combos:
        v = [0] * p.atom_count
        for lam, c in zip(combo, kern):
            if lam:
                for j in range(p.atom_count):
                    v[j] += lam * c[j]
        vecs.append(v)
    return lattice_basis_of(vecs, p.atom_count)


def is_length_factorial(p: MonoidPresentation, strategy: str = "kernel",
                        bound: int | None = None) -> tuple[bool, dict]:
    """Decide length-factoriality; returns (verdict, certificate)."""
    if strategy == "kernel":
        if p.kernel.is_zero():
            return True, {"strategy": "kernel", "reason": "factorial"}
        master = master_relation(p)
        if master is not None:
            return True, {"strategy": "kernel", "master_relation": master}
        return False, {"strategy": "kernel",
                       "violating_relation": balanced_kernel_vector(p)}
    if strategy == "rank":
        if p.kernel.is_zero():
            return True, {"strategy": "rank", "reason": "factorial"}
        for j in range(p.atom_count):
            others = [a for i, a in enumerate(p.atoms) if i != j]
            if not integer_kernel(others, p.ambient.torsion).is_zero():
                continue
            shifted = [p.ambient.sub(p.atoms[j], b) for b in others]
            if integer_kernel(shifted, p.ambient.torsion).is_zero():
                return True, {"strategy": "rank", "witness_atom": j}
        return False, {"strategy": "rank", "witness_atom": None,
                       "violating_relation": balanced_kernel_vector(p)}
    if strategy == "brute":
        if bound is None or bound < 0:
            raise InputError("brute strategy needs a bound >= 0")
        for x in enumerate_elements(p, bound):
            zs = factorizations_raw(p, x)
            by_len: dict[int, tuple[int, ...]] = {}
            for z in zs:
                ell = sum(z)
                if ell in by_len:
                    pair = (Factorization(by_len[ell]), Factorization(z))
                    return False, {"strategy": "brute", "bound": bound,
                                   "element": x, "violating_pair": pair}
                by_len[ell] = z
        return True, {"strategy": "brute", "bound": bound}
    raise InputError(f"unknown length-factoriality strategy {strategy!r}")


# ---------------------------------------------------------------------------
# Pure irreducibles
# ---------------------------------------------------------------------------


def atom_signature(p: MonoidPresentation, i: int) -> Sublattice2:
    """The signature lattice { (balance(c), c_i) : c in the kernel }."""
    if not 0 <= i < p.atom_count:
        raise InputError(f"atom index {i} out of range")
    ones = (1,) * p.atom_count
    e_i = tuple(1 if j == i else 0 for j in range(p.atom_count))
    return image_lattice_2d(p.kernel, ones, e_i)


def signature_verdict(sig: Sublattice2) -> str:
    """Classify an atom from its signature lattice.

    "prime": the atom appears in no irredundant relation; "balanced-only":
    it appears, but every kernel vector is balanced (half-factorial ambient
    situation); "mixed": it appears on both sides of unbalanced relations or
    in a balanced one.
    """
    if sig.rank == 0:
        return "prime"
    if sig.rank == 2:
        return "mixed"
    pq_p, pq_q = sig.generator
    if pq_q == 0:
        return "prime"
    if pq_p == 0:
        return "balanced-only"
    return "purely-long" if pq_p * pq_q > 0 else "purely-short"


def pure_sets(p: MonoidPresentation) -> PureSets:
    """Purely long / purely short atoms by signature-lattice verdicts."""
    from .intlinalg import sublattice2_from_images

    balances = [balance(c) for c in p.kernel.vectors]
    signatures = tuple(
        sublattice2_from_images([(s, c[i]) for s, c in zip(balances, p.kernel.vectors)])
        for i in range(p.atom_count))
    verdicts = [signature_verdict(s) for s in signatures]
    return PureSets(
        tuple(i for i, v in enumerate(verdicts) if v == "purely-long"),
        tuple(i for i, v in enumerate(verdicts) if v == "purely-short"),
        signatures,
    )


def sweep_irredundant_relations(p: MonoidPresentation, bound: int) -> list[RelationVector]:
    """All irredundant relations (z1, z2) with grading(pi(z1)) <= bound."""
    rels: set[RelationVector] = set()
    for x in enumerate_elements(p, bound):
        zs = factorizations_raw(p, x)
        for i in range(len(zs)):
            for j in range(i + 1, len(zs)):
                if all(a == 0 or b == 0 for a, b in zip(zs[i], zs[j])):
                    rels.add(RelationVector.from_vector(
                        tuple(a - b for a, b in zip(zs[i], zs[j]))))
    return sorted(rels, key=lambda r: (p.grading.value(r.element_of(p), p.ambient), r.vector))


def oracle_pure_verdicts(p: MonoidPresentation, relations: Sequence[RelationVector]) -> list[str]:
    """Test the pure-irreducible definition directly on swept relations.

    An atom is purely long if it shows up in some unbalanced relation, always
    on the longer side, and never inside a balanced relation (an atom of a
    balanced relation combines with any unbalanced one to land on a wrong
    side, so balanced appearances disqualify).
    """
    k = p.atom_count
    long_seen = [False] * k
    short_seen = [False] * k
    balanced_seen = [False] * k
    for r in relations:
        s = r.balance
        for i, ci in enumerate(r.vector):
            if ci == 0:
                continue
            if s == 0:
                balanced_seen[i] = True
            elif (s > 0) == (ci > 0):
                long_seen[i] = True
            else:
                short_seen[i] = True
    out = []
    for i in range(k):
        if long_seen[i] and not short_seen[i] and not balanced_seen[i]:
            out.append("purely-long")
        elif short_seen[i] and not long_seen[i] and not balanced_seen[i]:
            out.append("purely-short")
        else:
            out.append("not-pure")
    return out


def pure_check_certificates(p: MonoidPresentation) -> list[RelationVector]:
    """One witnessing relation per atom, enough to expose every verdict.

    Pure and balanced-only verdicts need a relation containing the atom;
    mixed verdicts need a balanced relation containing it, which the preimage
    of (0, det) under the signature map always provides.  Feeding these to
    the sweep oracle guarantees verdict agreement at any base bound.
    """
    kern = p.kernel.vectors
    certs: list[RelationVector] = []
    for i in range(p.atom_count):
        verdict = signature_verdict(atom_signature(p, i))
        cert: Sequence[int] | None = None
        if verdict in ("purely-long", "purely-short", "balanced-only"):
            cert = next((c for c in kern if c[i]), None)
        elif verdict == "mixed":
            imgs = [(balance(c), c[i]) for c in kern]
            balanced = next((t for t, (s, q) in enumerate(imgs) if s == 0 and q), None)
            if balanced is not None:
                cert = kern[balanced]
            else:
                for a in range(len(imgs)):
                    done = False
                    for b in range(a + 1, len(imgs)):
                        if imgs[a][0] * imgs[b][1] != imgs[b][0] * imgs[a][1]:
                            cert = [-imgs[b][0] * x + imgs[a][0] * y
                                    for x, y in zip(kern[a], kern[b])]
                            done = True
                            break
                    if done:
                        break
        if cert is not None:
            certs.append(RelationVector.from_vector(cert))
    return certs


def cross_check_pure_sets(p: MonoidPresentation, base_bound: int) -> dict:
    """Signature-lattice verdicts vs. the definition-level relation oracle.

    The oracle tests the pure-irreducible definition directly on the swept
    irredundant relations, augmented by one certificate relation per atom so
    that a finite list already decides every verdict.
    """
    certs = pure_check_certificates(p)
    relations = sorted(set(sweep_irredundant_relations(p, base_bound)) | set(certs),
                       key=lambda r: r.vector)
    oracle = oracle_pure_verdicts(p, relations)
    lattice = [signature_verdict(s) for s in pure_sets(p).signatures]
    folded = ["purely-long" if v == "purely-long" else
              "purely-short" if v == "purely-short" else "not-pure"
              for v in lattice]
    agree = folded == oracle
    return {
        "bound": base_bound,
        "relations_swept": len(relations),
        "certificates": len(certs),
        "lattice_verdicts": lattice,
        "oracle_verdicts": oracle,
        "agree": agree,
    }


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------


def classify(p: MonoidPresentation) -> Classification:
    """All flags via the exact deciders, with the theorem cross-checks.

    Hard failures (PropertyAssertionError) when any of the following breaks:
    the rank and kernel length-factoriality strategies disagree; a proper
    length-factorial monoid is not PLS or has atom count != rank + 1; a
    torsion-free presentation of rank <= 2 violates PLS <=> proper LF.
    """
    factorial = is_factorial(p)
    hf = is_half_factorial(p)
    lf_kernel, cert_kernel = is_length_factorial(p, "kernel")
    lf_rank, cert_rank = is_length_factorial(p, "rank")
    if lf_kernel != lf_rank:
        raise PropertyAssertionError(
            f"length-factoriality strategies disagree: kernel={lf_kernel} rank={lf_rank}")
    lf = lf_kernel
    proper_lf = lf and not factorial
    pure = pure_sets(p)
    pls = pure.is_pls
    rank = gp_rank(p)
    certificates: dict = {}
    if cert_rank.get("witness_atom") is not None:
        certificates["witness_atom"] = cert_rank["witness_atom"]
    if "master_relation" in cert_kernel:
        certificates["master_relation"] = cert_kernel["master_relation"]
    if not lf:
        certificates["violating_relation"] = cert_kernel["violating_relation"]

    if factorial and not (hf and lf):
        raise PropertyAssertionError("factorial monoid failed HF or LF")
    if hf and lf and not factorial:
        raise PropertyAssertionError("HF and LF together must imply factorial")
    if proper_lf and not pls:
        raise PropertyAssertionError("proper length-factorial monoid must be PLS")
    if proper_lf and p.atom_count != rank + 1:
        raise PropertyAssertionError(
            f"proper LF monoid has {p.atom_count} atoms but rank {rank}")
    if rank <= 2 and not p.ambient.torsion and pls != proper_lf:
        raise PropertyAssertionError(
            "rank <= 2 torsion-free: PLS and proper length-factoriality must agree")
    return Classification(factorial, hf, lf, proper_lf, pls,
                          p.atom_count, rank, certificates)


# ---------------------------------------------------------------------------
# Catenary degrees
# ---------------------------------------------------------------------------


def _bottleneck_connectivity(zs: list, weight) -> int:
    """Max edge of a minimum bottleneck spanning tree (0 for <= 1 node)."""
    n = len(zs)
    if n <= 1:
        return 0
    edges = sorted((weight(zs[i], zs[j]), i, j)
                   for i in range(n) for j in range(i + 1, n))
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    best = 0
    count = n
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            best = w
            count -= 1
            if count == 1:
                break
    return best


def _monotone_bottleneck(zs: list[tuple[int, ...]]) -> int:
    """Smallest N with a monotone N-chain between every pair in the fiber."""
    n = len(zs)
    if n <= 1:
        return 0
    lengths = [sum(z) for z in zs]
    dist = [[distance(zs[i], zs[j]) for j in range(n)] for i in range(n)]
    worst = 0
    for s in range(n):
        # Bottleneck Dijkstra along non-decreasing lengths from zs[s].
        best = [None] * n
        best[s] = 0
        done = [False] * n
        while True:
            u = None
            for i in range(n):
                if not done[i] and best[i] is not None and (
                        u is None or best[i] < best[u]):
                    u = i
            if u is None:
                break
            done[u] = True
            for v in range(n):
                if done[v] or lengths[v] < lengths[u]:
                    continue
                cand = max(best[u], dist[u][v])
                if best[v] is None or cand < best[v]:
                    best[v] = cand
        for t in range(n):
            if lengths[t] >= lengths[s]:
                worst = max(worst, best[t])
    return worst


def catenary_element(p: MonoidPresentation, x: Sequence[int]) -> CatenaryReport:
    """c, c_eq, c_adj, c_mon of one element, computed from their definitions."""
    zs = factorizations_raw(p, x)
    if not zs:
        raise ElementNotInMonoid(f"{tuple(x)} has no factorizations")
    c = _bottleneck_connectivity(zs, distance)
    by_len: dict[int, list] = {}
    for z in zs:
        by_len.setdefault(sum(z), []).append(z)
    c_eq = max(_bottleneck_connectivity(group, distance) for group in by_len.values())
    lengths = sorted(by_len)
    c_adj = 0
    for k, ell in zip(lengths, lengths[1:]):
        c_adj = max(c_adj, min(distance(a, b) for a in by_len[k] for b in by_len[ell]))
    c_mon = _monotone_bottleneck(zs)
    if c_mon != max(c_eq, c_adj):
        raise PropertyAssertionError(
            f"monotone catenary degree of {tuple(x)} is {c_mon}, "
            f"expected max({c_eq}, {c_adj})")
    if c > c_mon:
        raise PropertyAssertionError("catenary degree exceeded the monotone one")
    return CatenaryReport(p.ambient.canon(x), c, c_eq, c_adj, c_mon)


def default_bound(p: MonoidPresentation) -> int:
    return 4 * max(p.atom_gradings, default=1)


def catenary_monoid(p: MonoidPresentation, bound: int | None = None) -> dict:
    """Monoid-level catenary report.

    Exact value max(|w1|, |w2|) for proper length-factorial presentations;
    bounded-sweep values (with the bound recorded) otherwise.  The sweep is
    extended to cover the certificate elements so that the swept c_eq
    vanishes exactly when the monoid is length-factorial.
    """
    bound = default_bound(p) if bound is None else bound
    lf, cert = is_length_factorial(p, "kernel")
    master: MasterRelation | None = cert.get("master_relation")
    exact = None
    if master is not None:
        exact = max(master.lengths)
        bound = max(bound, p.grading.value(master.element_of(p), p.ambient))
    extra: list[Vec] = []
    if not lf:
        # Make sure the sweep witnesses the violation even when the smallest
        # element with two equal-length factorizations sits past the bound.
        viol: RelationVector = cert["violating_relation"]
        viol_element = viol.element_of(p)
        if p.grading.value(viol_element, p.ambient) > bound:
            extra.append(viol_element)
    sweep_c = sweep_eq = sweep_adj = sweep_mon = 0
    for x in enumerate_elements(p, bound) + extra:
        rep = catenary_element(p, x)
        sweep_c = max(sweep_c, rep.c)
        sweep_eq = max(sweep_eq, rep.c_eq)
        sweep_adj = max(sweep_adj, rep.c_adj)
        sweep_mon = max(sweep_mon, rep.c_mon)
    if (sweep_eq == 0) != lf:
        raise PropertyAssertionError("swept equal catenary degree contradicts "
                                     "the length-factoriality decider")
    betti = betti_elements(p, "certified")
    betti_mu = max((mu(p, b) for b in betti.elements), default=0)
    if sweep_c > betti_mu:
        raise PropertyAssertionError("sweep exceeded the Betti-element catenary formula")
    report = {
        "bound": bound,
        "exact": exact,
        "sweep": {"c": sweep_c, "c_eq": sweep_eq, "c_adj": sweep_adj, "c_mon": sweep_mon},
        "betti_mu": betti_mu,
        "length_factorial": lf,
    }
    if exact is not None:
        if sweep_c != exact or sweep_adj != exact or sweep_mon != exact:
            raise PropertyAssertionError("swept catenary values missed the exact one")
        if betti_mu != exact:
            raise PropertyAssertionError("Betti formula disagrees with the master relation")
    return report


# ---------------------------------------------------------------------------
# Decomposition and relation shapes
# ---------------------------------------------------------------------------


def decompose(p: MonoidPresentation, bound: int | None = None
              ) -> tuple[MonoidPresentation, MonoidPresentation, dict]:
    """Split a PLS presentation as H + O with H half-factorial, O proper LF,
    and H and O meeting only in 0.

    The pure atoms always end up in O and the primary construction takes O to
    be exactly the pure atoms.  That construction can produce a factorial O
    (the pure atoms may be integrally independent even though the monoid has
    unbalanced relations through non-pure atoms), in which case O is extended
    by the smallest canonical set of non-pure atoms that restores a proper
    length-factorial O while keeping H half-factorial and the intersection
    trivial.
    """
    from itertools import combinations

    pure = pure_sets(p)
    if not pure.is_pls:
        raise NotPLS("decomposition needs both purely long and purely short atoms")
    pure_idx = sorted(set(pure.purely_long) | set(pure.purely_short))
    rest_idx = [i for i in range(p.atom_count) if i not in pure_idx]

    def attempt(o_indices: Sequence[int]) -> tuple[MonoidPresentation, MonoidPresentation, dict] | None:
        o_set = set(o_indices)
        o_atoms = [a for i, a in enumerate(p.atoms) if i in o_set]
        h_atoms = [a for i, a in enumerate(p.atoms) if i not in o_set]
        O = presentation_from_atoms(o_atoms, p.ambient, grading=p.grading)
        H = presentation_from_atoms(h_atoms, p.ambient, grading=p.grading)
        checks: dict = {
            "o_atom_indices": tuple(sorted(o_set)),
            "h_half_factorial": is_half_factorial(H),
            "o_length_factorial": is_length_factorial(O, "kernel")[0],
            "o_factorial": is_factorial(O),
        }
        checks.update(_trivial_intersection(H, O, bound))
        ok = (checks["h_half_factorial"] and checks["o_length_factorial"]
              and not checks["o_factorial"] and checks["intersection_trivial"])
        return (H, O, checks) if ok else None

    result = attempt(pure_idx)
    if result is not None:
        h, o, checks = result
        checks["construction"] = "pure-atoms"
        return h, o, checks
    for extra in range(1, len(rest_idx) + 1):
        for added in combinations(rest_idx, extra):
            result = attempt(pure_idx + list(added))
            if result is not None:
                h, o, checks = result
                checks["construction"] = "pure-atoms-extended"
                return h, o, checks
    raise PropertyAssertionError("no half-factorial + proper-length-factorial "
                                 "splitting with trivial intersection exists")


def _trivial_intersection(H: MonoidPresentation, O: MonoidPresentation,
                          bound: int | None) -> dict:
    if not H.atoms or not O.atoms:
        return {"intersection_trivial": True, "intersection_method": "empty-side"}
    rows = [H.ambient.free_part(a) for a in H.atoms]
    rows += [tuple(-c for c in O.ambient.free_part(a)) for a in O.atoms]
    if feasible_geq_one(rows, H.ambient.free_rank) is not None:
        # A functional strictly positive on H's cone and strictly negative on
        # O's certifies that the cones (hence the monoids) meet only in 0.
        return {"intersection_trivial": True, "intersection_method": "cone-separation"}
    b = bound if bound is not None else max(default_bound(H), default_bound(O))
    common = set(enumerate_elements(H, b)) & set(enumerate_elements(O, b))
    return {
        "intersection_trivial": common == {H.ambient.zero},
        "intersection_method": "bounded-enumeration",
        "intersection_bound": b,
    }


def relation_shape_check(p: MonoidPresentation, bound: int | None = None) -> dict:
    """Verify that every swept relation is n copies of one unbalanced
    relation times a balanced pure-free relation.

    The unbalanced relation w carries the minimal number m of copies of the
    first purely long atom; each swept irredundant relation c with balance of
    sign s must then satisfy c = n*w + r (at the relation-vector level) with
    n = c_a / m and r balanced and supported off the pure atoms.
    """
    pure = pure_sets(p)
    if not pure.is_pls:
        raise NotPLS("relation shapes are defined for PLS presentations")
    bound = default_bound(p) if bound is None else bound
    a_idx = pure.purely_long[0]
    coords = [c[a_idx] for c in p.kernel.vectors]
    m, coeffs = _gcd_combo(coords)
    w = [0] * p.atom_count
    for t, lam in enumerate(coeffs):
        if lam:
            for j in range(p.atom_count):
                w[j] += lam * p.kernel.vectors[t][j]
    if w[a_idx] < 0:
        w = [-x for x in w]
    w_rel = RelationVector.from_vector(w)
    if w_rel.vector[a_idx] != m or w_rel.balance <= 0:
        raise PropertyAssertionError("minimal-copy relation is not oriented long")
    pure_idx = sorted(set(pure.purely_long) | set(pure.purely_short))
    violations = []
    checked = 0
    for rel in sweep_irredundant_relations(p, bound):
        checked += 1
        c = rel.vector
        if rel.balance == 0:
            if any(c[i] for i in pure_idx):
                violations.append({"relation": rel, "why": "balanced relation hits a pure atom"})
            continue
        k = c[a_idx]
        if k <= 0 or k % m:
            violations.append({"relation": rel, "why": f"copies of the long atom not a positive multiple of {m}"})
            continue
        n = k // m
        r = [x - n * y for x, y in zip(c, w_rel.vector)]
        if balance(r) != 0 or any(r[i] for i in pure_idx):
            violations.append({"relation": rel, "why": "residual is not balanced and pure-free"})
    return {
        "anchor_atom": a_idx,
        "min_copies": m,
        "w": w_rel,
        "balanced_part_basis": _balanced_pure_free_basis(p, pure_idx),
        "bound": bound,
        "relations_checked": checked,
        "violations": violations,
        "ok": not violations,
    }


def _balanced_pure_free_basis(p: MonoidPresentation, pure_idx: list[int]) -> tuple[Vec, ...]:
    """Basis of the kernel vectors that are balanced and avoid pure atoms."""
    from .intlinalg import kernel_basis, lattice_basis_of

    kern = p.kernel.vectors
    if not kern:
        return ()
    rows = [[balance(c) for c in kern]]
    rows += [[c[i] for c in kern] for i in pure_idx]
    combos = kernel_basis(rows, len(kern))
    vecs = []
    for combo in combos:
        v = [0] * p.atom_count
        for lam, c in zip(combo, kern):
            if lam:
                for j in range(p.atom_count):
                    v[j] += lam * c[j]
        vecs.append(v)
    return lattice_basis_of(vecs, p.atom_count)


def _gcd_combo(values: Sequence[int]) -> tuple[int, list[int]]:
    """gcd of values together with an integer combination achieving it."""
    g = 0
    coeffs = [0] * len(values)
    for i, v in enumerate(values):
        if v == 0:
            continue
        if g == 0:
            g = abs(v)
            coeffs = [0] * len(values)
            coeffs[i] = 1 if v > 0 else -1
            continue
        x, y, g2 = _xgcd(g, v)
        coeffs = [x * c for c in coeffs]
        coeffs[i] += y
        g = g2
    if g == 0:
        raise PropertyAssertionError("pure atom appears in no kernel vector")
    return g, coeffs


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# Rank-1 (Puiseux) classification
# ---------------------------------------------------------------------------


def puiseux_classify(spec: MonoidSpec) -> dict:
    """Evaluate the five equivalent rank-1 statements independently.

    (a) proper length-factorial, (b) PLS, (c) min atom purely long and max
    atom purely short, (d) at least one of those inclusions, (e) exactly two
    atoms.  All five are computed separately and must agree; when they hold,
    the pure sets are the singleton min/max atoms in the original rational
    scale.
    """
    if spec.kind not in ("numerical", "puiseux"):
        raise InputError("rank-1 classification expects a numerical or puiseux spec")
    p = normalize_spec(spec)
    cls = classify(p)
    pure = pure_sets(p)
    values = [Fraction(a[0], p.scale) for a in p.atoms]
    order = sorted(range(len(values)), key=lambda i: values[i])
    stmt_a = cls.proper_length_factorial
    stmt_b = cls.pls
    stmt_c = bool(values) and order[0] in pure.purely_long and order[-1] in pure.purely_short
    stmt_d = bool(values) and (order[0] in pure.purely_long or order[-1] in pure.purely_short)
    stmt_e = p.atom_count == 2
    if len({stmt_a, stmt_b, stmt_c, stmt_d, stmt_e}) > 1:
        raise PropertyAssertionError(
            f"rank-1 statements disagree: {stmt_a, stmt_b, stmt_c, stmt_d, stmt_e}")
    report = {
        "statements": {"proper_length_factorial": stmt_a, "pls": stmt_b,
                       "extremes_are_pure": stmt_c, "one_extreme_is_pure": stmt_d,
                       "two_atoms": stmt_e},
        "holds": stmt_a,
        "atoms": [str(v) for v in values],
        "purely_long": [str(values[i]) for i in pure.purely_long],
        "purely_short": [str(values[i]) for i in pure.purely_short],
    }
    if stmt_a:
        report["purely_long_expected"] = [str(min(values))]
        report["purely_short_expected"] = [str(max(values))]
        if (report["purely_long"] != report["purely_long_expected"]
                or report["purely_short"] != report["purely_short_expected"]):
            raise PropertyAssertionError("rank-1 pure sets are not the extreme atoms")
    return report
