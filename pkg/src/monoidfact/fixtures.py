"""Named example monoids used by the built-in verification suite and tests.

Ids:
  N23            numerical <2,3>
  MN3, MN4, MN5  numerical <n, ..., 2n-1> for n = 3, 4, 5
  E46            rank-3 affine monoid that is PLS but not length-factorial
  M0..M3         the line monoid (0,3),(1,2),(2,1),(3,0) and its extensions
  MR2, MR3       <e_1+...+e_r, r*e_1, ..., r*e_r>, half-factorial, r+1 atoms
  T4, T5         torsion examples in Z/(n-2) x Z^2
  DEC            non-PLS monoid that still splits as factorial + proper LF
  K62, K63       bundled Dedekind scenarios (truncated Krull models)
"""

from __future__ import annotations

from .presentation import AmbientGroup, MonoidPresentation, MonoidSpec, normalize_spec


def numerical(*gens: int) -> MonoidSpec:
    return MonoidSpec("numerical", tuple(gens))


def affine(*gens: tuple[int, ...]) -> MonoidSpec:
    return MonoidSpec("affine", tuple(gens))


def _interval_spec(n: int) -> MonoidSpec:
    return numerical(*range(n, 2 * n))


def _mr_spec(r: int) -> MonoidSpec:
    gens = [tuple(1 for _ in range(r))]
    gens += [tuple(r if j == i else 0 for j in range(r)) for i in range(r)]
    return affine(*gens)


def _torsion_spec(n: int) -> MonoidSpec:
    ambient = AmbientGroup(free_rank=2, torsion=(n - 2,))
    gens = [(0, 0, 2), (0, 0, 3)]
    gens += [(k - 3, 1, 0) for k in range(3, n + 1)]
    return MonoidSpec("affine_torsion", tuple(gens), ambient)


_LINE = [(0, 3), (1, 2), (2, 1), (3, 0)]

SPECS: dict[str, MonoidSpec] = {
    "N23": numerical(2, 3),
    "MN3": _interval_spec(3),
    "MN4": _interval_spec(4),
    "MN5": _interval_spec(5),
    "E46": affine((0, 1, 1), (0, 2, 1), (1, 2, 3), (2, 2, 2), (3, 2, 1)),
    "M0": affine(*_LINE),
    "M1": affine(*_LINE, (1, 1)),
    "M2": affine(*_LINE, (2, 2)),
    "M3": affine(*_LINE, (0, 2), (1, 1), (2, 0)),
    "MR2": _mr_spec(2),
    "MR3": _mr_spec(3),
    "T4": _torsion_spec(4),
    "T5": _torsion_spec(5),
    "DEC": affine((1, 1), (0, 3), (1, 2), (2, 1), (3, 0)),
}

KRULL_SCENARIOS: dict[str, str] = {"K62": "6.2", "K63": "6.3"}

FIXTURE_IDS = tuple(SPECS) + tuple(KRULL_SCENARIOS)


def presentation(fixture_id: str) -> MonoidPresentation:
    if fixture_id in SPECS:
        return normalize_spec(SPECS[fixture_id])
    if fixture_id in KRULL_SCENARIOS:
        from . import krull

        key = KRULL_SCENARIOS[fixture_id]
        dist = krull.distribution_from_document(krull.SCENARIO_DOCUMENTS[key])
        return krull.to_presentation(dist, krull.SCENARIO_DEGREE_BOUNDS[key])
    raise KeyError(fixture_id)
