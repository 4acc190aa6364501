"""Independent brute-force oracles used to validate the engine.

These stay deliberately naive: plain recursion with memoization and no
pruning beyond the grading bound, so they share no code path with the
production enumerator.
"""

from functools import lru_cache


def naive_factorizations(p, x):
    """All exponent tuples z with sum z_i * atom_i = x, by plain recursion."""
    atoms = p.atoms
    k = len(atoms)
    ambient = p.ambient

    @lru_cache(maxsize=None)
    def rec(i, residual):
        if i == k:
            return frozenset([()]) if residual == ambient.zero else frozenset()
        out = set()
        budget = p.grading.value(residual, ambient)
        step = p.atom_gradings[i]
        e = 0
        while e * step <= budget:
            rest = ambient.sub(residual, ambient.scale(e, atoms[i]))
            for tail in rec(i + 1, rest):
                out.add((e,) + tail)
            e += 1
        return frozenset(out)

    result = rec(0, ambient.canon(x))
    rec.cache_clear()
    return set(result)


def naive_length_set(p, x):
    return {sum(z) for z in naive_factorizations(p, x)}


def element_sum(p, exps):
    total = [0] * p.ambient.dim
    for e, a in zip(exps, p.atoms):
        for j in range(p.ambient.dim):
            total[j] += e * a[j]
    return p.ambient.canon(total)


def relation_holds(p, vector):
    """Does sum c_i * atom_i vanish in the ambient group?  Recomputed directly."""
    total = [0] * p.ambient.dim
    for c, a in zip(vector, p.atoms):
        for j in range(p.ambient.dim):
            total[j] += c * a[j]
    return p.ambient.canon(total) == p.ambient.zero
