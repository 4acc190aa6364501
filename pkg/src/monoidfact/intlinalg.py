"""Exact integer linear algebra: Hermite normal form, integer kernels,
rational rank, and rank-classified sublattices of Z^2.

Everything here runs on plain Python ints (arbitrary precision); no floating
point is used anywhere.  Matrices are sequences of rows.  The Hermite normal
form is column-style: ``h = m @ u`` with ``u`` unimodular, pivots positive,
pivot rows strictly increasing, and entries to the left of a pivot reduced
into ``[0, pivot)``.  That convention is fixed so outputs are reproducible
bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

Vec = tuple[int, ...]
Matrix = tuple[Vec, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    # Maintain x * a + y * b == g alongside the Euclidean algorithm.
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _hnf_columns(cols: list[list[int]], nrows: int, track: list[list[int]] | None = None,
                 reduce_offdiag: bool = True) -> list[int]:
    """Column-reduce ``cols`` in place to Hermite form; returns pivot rows.

    ``track`` (same number of columns) receives the identical column
    operations, which is how callers recover the transformation or a kernel.
    """
    ncols = len(cols)
    pivot_rows: list[int] = []
    pc = 0  # next pivot column slot
    for r in range(nrows):
        j0 = -1
        for j in range(pc, ncols):
            if cols[j][r]:
                j0 = j
                break
        if j0 < 0:
            continue
        for j in range(j0 + 1, ncols):
            if not cols[j][r]:
                continue
            a, b = cols[j0][r], cols[j][r]
            if b % a == 0:
                q = b // a
                _col_axpy(cols, j, j0, -q)
                if track is not None:
                    _col_axpy(track, j, j0, -q)
            else:
                x, y, g = xgcd(a, b)
                _col_2x2(cols, j0, j, x, y, -(b // g), a // g)
                if track is not None:
                    _col_2x2(track, j0, j, x, y, -(b // g), a // g)
        if j0 != pc:
            cols[pc], cols[j0] = cols[j0], cols[pc]
            if track is not None:
                track[pc], track[j0] = track[j0], track[pc]
        if cols[pc][r] < 0:
            cols[pc] = [-v for v in cols[pc]]
            if track is not None:
                track[pc] = [-v for v in track[pc]]
        if reduce_offdiag:
            piv = cols[pc][r]
            for j in range(pc):
                q = cols[j][r] // piv  # floor division: residues land in [0, piv)
                if q:
                    _col_axpy(cols, j, pc, -q)
                    if track is not None:
                        _col_axpy(track, j, pc, -q)
        pivot_rows.append(r)
        pc += 1
    return pivot_rows


def _col_axpy(cols: list[list[int]], j: int, src: int, q: int) -> None:
    cj, cs = cols[j], cols[src]
    for i in range(len(cj)):
        cj[i] += q * cs[i]


def _col_2x2(cols: list[list[int]], j0: int, j1: int, a: int, b: int, c: int, d: int) -> None:
    # (col_j0, col_j1) <- (a*col_j0 + b*col_j1, c*col_j0 + d*col_j1); ad - bc = +-1
    c0, c1 = cols[j0], cols[j1]
    for i in range(len(c0)):
        u, v = c0[i], c1[i]
        c0[i] = a * u + b * v
        c1[i] = c * u + d * v


def _to_cols(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], int, int]:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return cols, nrows, ncols


def _to_rows(cols: list[list[int]], nrows: int) -> Matrix:
    return tuple(tuple(col[i] for col in cols) for i in range(nrows))


def hnf(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Column-style Hermite normal form: returns (h, u) with h = m @ u.

    ``h`` is unique for fixed ``m``; ``u`` is unimodular.  Zero columns of
    ``h`` are collected on the right.
    """
    cols, nrows, ncols = _to_cols(m)
    track = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    _hnf_columns(cols, nrows, track)
    return _to_rows(cols, nrows), _to_rows(track, ncols)


def rational_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank of ``m`` over the rationals, computed fraction-free."""
    if not m or not m[0]:
        return 0
    cols, nrows, _ = _to_cols(m)
    return len(_hnf_columns(cols, nrows, reduce_offdiag=False))


def lattice_basis_of(vectors: Sequence[Sequence[int]], ambient_dim: int) -> tuple[Vec, ...]:
    """Canonical (HNF) basis of the lattice generated by ``vectors`` in Z^dim."""
    gens = [list(v) for v in vectors]
    pivots = _hnf_columns(gens, ambient_dim)
    return tuple(tuple(gens[j]) for j in range(len(pivots)))


def kernel_basis(m: Sequence[Sequence[int]], ncols: int) -> tuple[Vec, ...]:
    """Canonical basis of { x in Z^ncols : m @ x = 0 }.

    Stacks an identity block under ``m`` and column-reduces the top block;
    columns whose top part vanished carry kernel vectors in the bottom block.
    """
    nrows = len(m)
    cols = [[m[i][j] for i in range(nrows)] + [1 if t == j else 0 for t in range(ncols)]
            for j in range(ncols)]
    pivots = _hnf_columns(cols, nrows, reduce_offdiag=False)
    rank = len(pivots)
    kern = [col[nrows:] for col in cols[rank:]]
    return lattice_basis_of(kern, ncols)


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^ambient_dim given by an HNF-canonical basis.

    Basis vectors are linearly independent over Q; ``member`` decides exact
    lattice membership by pivot-wise division against the HNF columns.
    """

    ambient_dim: int
    vectors: tuple[Vec, ...]
    _pivot_rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pivots = []
        for v in self.vectors:
            r = next((i for i, x in enumerate(v) if x), None)
            if r is None:
                raise ValueError("zero vector in lattice basis")
            pivots.append(r)
        object.__setattr__(self, "_pivot_rows", tuple(pivots))

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def is_zero(self) -> bool:
        return not self.vectors

    def member(self, v: Sequence[int]) -> bool:
        # Pivot rows are strictly increasing and later vectors vanish above
        # their pivot, so the coefficient at each pivot is forced in turn.
        if len(v) != self.ambient_dim:
            raise ValueError("dimension mismatch")
        x = list(v)
        for vec, r in zip(self.vectors, self._pivot_rows):
            if x[r] % vec[r]:
                return False
            q = x[r] // vec[r]
            if q:
                for i in range(self.ambient_dim):
                    x[i] -= q * vec[i]
        return not any(x)


def integer_kernel(atoms: Sequence[Sequence[int]], torsion: Sequence[int] = ()) -> LatticeBasis:
    """Basis of { c in Z^k : sum_i c_i * a_i = 0 in prod Z/m_j x Z^d }.

    Vectors carry the torsion coordinates first (one per modulus in
    ``torsion``) followed by the free coordinates.  Each torsion congruence is
    lifted to an equation over Z with an auxiliary unknown multiplying m_j,
    and the lifted kernel is projected back onto the atom coordinates.
    """
    k = len(atoms)
    if k == 0:
        return LatticeBasis(0, ())
    dim = len(atoms[0])
    t = len(torsion)
    rows = []
    for r in range(dim):
        row = [atoms[j][r] for j in range(k)]
        row += [torsion[r] if (r < t and j == r) else 0 for j in range(t)]
        rows.append(row)
    lifted = kernel_basis(rows, k + t)
    projected = [v[:k] for v in lifted]
    return LatticeBasis(k, lattice_basis_of(projected, k))


@dataclass(frozen=True)
class Sublattice2:
    """A sublattice of Z^2 classified by rank.

    For rank 1 the ``generator`` is the primitive direction vector (p, q),
    sign-normalized to p > 0, or p = 0 and q > 0; ``basis`` keeps the actual
    HNF basis (so rank-1 lattices generated by a non-primitive vector still
    test membership exactly).
    """

    rank: int
    generator: tuple[int, int] | None
    basis: tuple[tuple[int, int], ...]

    def member(self, v: Sequence[int]) -> bool:
        if self.rank == 0:
            return not any(v)
        return LatticeBasis(2, self.basis).member(v)


def image_lattice_2d(kernel: LatticeBasis, f: Sequence[int], g: Sequence[int]) -> Sublattice2:
    """The sublattice { (f(c), g(c)) : c in the kernel lattice } of Z^2."""
    return sublattice2_from_images([(_dot(f, c), _dot(g, c)) for c in kernel.vectors])


def sublattice2_from_images(images: Sequence[tuple[int, int]]) -> Sublattice2:
    basis = lattice_basis_of(images, 2)
    if not basis:
        return Sublattice2(0, None, ())
    if len(basis) == 1:
        p, q = basis[0]
        d = _gcd(abs(p), abs(q))
        p, q = p // d, q // d
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return Sublattice2(1, (p, q), basis)
    return Sublattice2(2, None, basis)


def _dot(f: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(f, v))


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a
