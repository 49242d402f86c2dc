"""Exact arbitrary-precision rational linear algebra.

All kernel computations are exact: forward elimination is fraction-free
(Bareiss), so intermediate values stay integral, and back-substitution
runs over ``fractions.Fraction``.  Kernel bases are canonicalized to
primitive integer vectors in reduced row-echelon shape, which makes
subspace equality a syntactic comparison and keeps witness vectors
reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .digraph import Digraph
from .errors import DimensionMismatch, NotSquare


class RatMatrix:
    """Dense row-major matrix with int or Fraction entries."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows) -> None:
        rows = tuple(tuple(r) for r in rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", len(rows[0]) if rows else 0)
        if any(len(r) != self.ncols for r in rows):
            raise DimensionMismatch("ragged rows")

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RatMatrix({self.nrows}x{self.ncols})"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.rows))) if self.rows else RatMatrix(())

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @classmethod
    def from_rows(cls, rows) -> "RatMatrix":
        return cls(rows)


def stack(m1: RatMatrix, m2: RatMatrix) -> RatMatrix:
    if m1.ncols != m2.ncols:
        raise DimensionMismatch("column counts differ")
    return RatMatrix(m1.rows + m2.rows)


def sub_scalar_identity(m: RatMatrix, lam) -> RatMatrix:
    if m.nrows != m.ncols:
        raise NotSquare("matrix is not square")
    return RatMatrix(tuple(tuple(m.rows[i][j] - (lam if i == j else 0)
                                 for j in range(m.ncols))
                           for i in range(m.nrows)))


def adjacency_matrix(g: Digraph) -> RatMatrix:
    """0/1 matrix with entry (i, j) = 1 iff arc i -> j."""
    rows = []
    for i in range(g.n):
        row = [0] * g.n
        for j in g.out_adj[i]:
            row[j] = 1
        rows.append(tuple(row))
    return RatMatrix(tuple(rows))


@dataclass(frozen=True)
class KernelBasis:
    """Canonical basis of a rational subspace.

    Vectors are primitive integer rows of the reduced row-echelon basis
    (leading entries positive, content 1) with strictly increasing pivot
    columns.  Two row-equivalent inputs yield identical bases.
    """

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def support(self) -> frozenset[int]:
        """Coordinates carried by at least one basis vector."""
        covered = set()
        for v in self.vectors:
            covered.update(i for i, x in enumerate(v) if x)
        return frozenset(covered)


def _int_rows(m: RatMatrix) -> list[list[int]]:
    # Row scaling does not change the kernel, the rank or the row space.
    out = []
    for row in m.rows:
        denoms = [x.denominator for x in row if isinstance(x, Fraction)]
        if denoms:
            scale = math.lcm(*denoms)
            out.append([int(x * scale) for x in row])
        else:
            out.append(list(row))
    return out


def _echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """In-place fraction-free (Bareiss) elimination; returns (rows, pivot cols)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        piv = rows[r][c]
        for i in range(r + 1, nrows):
            row_i = rows[i]
            fac = row_i[c]
            row_r = rows[r]
            if fac:
                for j in range(c + 1, ncols):
                    num = row_i[j] * piv - fac * row_r[j]
                    if __debug__:
                        q, rem = divmod(num, prev)
                        if rem:
                            raise ArithmeticError("Bareiss divisibility broken")
                        row_i[j] = q
                    else:
                        row_i[j] = num // prev
            else:
                for j in range(c + 1, ncols):
                    num = row_i[j] * piv
                    if __debug__:
                        q, rem = divmod(num, prev)
                        if rem:
                            raise ArithmeticError("Bareiss divisibility broken")
                        row_i[j] = q
                    else:
                        row_i[j] = num // prev
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return rows, pivots


def _clear_to_int(vec: list[Fraction | int]) -> tuple[int, ...]:
    denoms = [x.denominator for x in vec if isinstance(x, Fraction) and x]
    scale = math.lcm(*denoms) if denoms else 1
    ints = [int(x * scale) for x in vec]
    content = 0
    for x in ints:
        content = math.gcd(content, x)
    if content > 1:
        ints = [x // content for x in ints]
    for x in ints:
        if x:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


def _rref_fractions(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c]), -1)
        if pr < 0:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [a - fac * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _canonical_basis(ambient: int, raw_vectors: list[list[Fraction]]) -> KernelBasis:
    if not raw_vectors:
        return KernelBasis(ambient, (), ())
    rref, pivots = _rref_fractions([list(map(Fraction, v)) for v in raw_vectors])
    vectors = tuple(_clear_to_int(row) for row in rref)
    return KernelBasis(ambient, vectors, tuple(pivots))


def kernel_basis(m: RatMatrix) -> KernelBasis:
    """Canonical basis of the right kernel {x : M x = 0}."""
    ncols = m.ncols
    if m.nrows == 0:
        return _canonical_basis(ncols, [[Fraction(int(i == f)) for i in range(ncols)]
                                        for f in range(ncols)])
    rows, pivots = _echelon(_int_rows(m))
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    vectors = []
    rank = len(pivots)
    for f in free:
        x: list[Fraction] = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i in range(rank - 1, -1, -1):
            p = pivots[i]
            row = rows[i]
            s = Fraction(0)
            for j in range(p + 1, ncols):
                if row[j] and x[j]:
                    s += row[j] * x[j]
            x[p] = -s / row[p]
        vectors.append(x)
    return _canonical_basis(ncols, vectors)


def rank(m: RatMatrix) -> int:
    if m.nrows == 0:
        return 0
    _, pivots = _echelon(_int_rows(m))
    return len(pivots)


def intersect(b1: KernelBasis, b2: KernelBasis) -> KernelBasis:
    """Canonical basis of span(b1) intersected with span(b2).

    Each span is turned into a constraint system (the kernel of its basis
    matrix, which annihilates exactly the span under the standard bilinear
    form); the intersection is the kernel of the stacked constraints.
    """
    if b1.ambient_dim != b2.ambient_dim:
        raise DimensionMismatch("ambient dimensions differ")
    ambient = b1.ambient_dim
    if not b1.vectors or not b2.vectors:
        return KernelBasis(ambient, (), ())
    constraints = []
    for basis in (b1, b2):
        dual = kernel_basis(RatMatrix(basis.vectors))
        constraints.extend(dual.vectors)
    if not constraints:
        # Both spans are the full space.
        return kernel_basis(RatMatrix(()) if ambient == 0
                            else RatMatrix((tuple([0] * ambient),)))
    return kernel_basis(RatMatrix(tuple(constraints)))


def full_vector_witness(basis: KernelBasis) -> tuple[int, ...] | None:
    """A vector in the span with no zero coordinate, or None.

    One exists iff every coordinate is supported by some basis vector;
    over the rationals a combination with multipliers 1, t, t^2, ... and
    t = 1 + max |entry| can never cancel a supported coordinate.
    """
    if not basis.vectors:
        return None
    if len(basis.support()) != basis.ambient_dim:
        return None
    t = 1 + max(abs(x) for vec in basis.vectors for x in vec)
    acc = [0] * basis.ambient_dim
    mult = 1
    for vec in basis.vectors:
        for i, x in enumerate(vec):
            acc[i] += mult * x
        mult *= t
    witness = _clear_to_int(acc)
    if any(x == 0 for x in witness):
        raise ArithmeticError("witness construction cancelled a coordinate")
    return witness


def eigenspace_basis(m: RatMatrix, lam: int) -> KernelBasis:
    """kernel_basis(M - lam*I)."""
    return kernel_basis(sub_scalar_identity(m, lam))


def is_full(vector) -> bool:
    return all(x != 0 for x in vector)
