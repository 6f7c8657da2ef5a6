"""Exact rational linear algebra: kernels, involution eigensplits, symplectic predicates.

Everything here works over Q (``fractions.Fraction``) or Q(i) (:class:`GaussianRational`)
with no rounding anywhere.  Canonical forms follow reduced-echelon conventions so
that outputs are directly comparable in tests:

* null-space / eigenspace bases are normalized to leading coefficient 1 and
  ordered by pivot position,
* matrices are immutable, equality is entry-wise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce ints / strings / Fractions to Fraction (floats are rejected)."""
    if isinstance(x, float):
        raise TypeError("refusing float -> Fraction coercion; pass exact input")
    return Fraction(x)


def vector(xs: Iterable) -> Vector:
    return tuple(frac(x) for x in xs)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class RatMatrix:
    """Immutable rectangular matrix over Q."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.entries:
            width = len(self.entries[0])
            if any(len(row) != width for row in self.entries):
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "RatMatrix":
        return cls(tuple(vector(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(tuple(tuple(Fraction(0) for _ in range(cols)) for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(self.col(j) for j in range(self.cols)))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        self._shape_check(other)
        return RatMatrix(tuple(tuple(a + b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        self._shape_check(other)
        return RatMatrix(tuple(tuple(a - b for a, b in zip(r1, r2))
                               for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(tuple(tuple(-a for a in row) for row in self.entries))

    def scale(self, c) -> "RatMatrix":
        c = frac(c)
        return RatMatrix(tuple(tuple(c * a for a in row) for row in self.entries))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = other.transpose().entries
        return RatMatrix(tuple(tuple(dot(row, col) for col in cols) for row in self.entries))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(dot(row, v) for row in self.entries)

    def _shape_check(self, other: "RatMatrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def rref(m: RatMatrix) -> tuple[RatMatrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [inv * a for a in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return RatMatrix.from_rows(rows), tuple(pivots)


def rank(m: RatMatrix) -> int:
    return len(rref(m)[1])


def kernel(m: RatMatrix) -> list[Vector]:
    """Canonical basis of the null space of ``m``.

    One basis vector per free column, ordered by free-column index and scaled
    so the leading nonzero entry is 1.  A zero matrix yields the standard basis.
    """
    reduced, pivots = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in pivots]
    basis: list[Vector] = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced.entries[i][j]
        lead = next(a for a in v if a != 0)
        basis.append(tuple(a / lead for a in v))
    return basis


def solve_unique(m: RatMatrix, b: Sequence[Fraction]) -> Vector | None:
    """Solve m x = b when a solution exists; None if inconsistent.

    If the system is underdetermined, returns the solution with free
    variables set to zero.
    """
    if m.rows != len(b):
        raise ValueError("right-hand side length mismatch")
    aug = RatMatrix(tuple(row + (frac(bi),) for row, bi in zip(m.entries, b)))
    reduced, pivots = rref(aug)
    if m.cols in pivots:  # pivot in the augmented column: inconsistent
        return None
    x = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        x[p] = reduced.entries[i][m.cols]
    return tuple(x)


def invert(m: RatMatrix) -> RatMatrix:
    if not m.is_square:
        raise ValueError("only square matrices are invertible")
    n = m.rows
    aug = RatMatrix(tuple(row + RatMatrix.identity(n).entries[i]
                          for i, row in enumerate(m.entries)))
    reduced, pivots = rref(aug)
    if tuple(pivots) != tuple(range(n)):
        raise ValueError("matrix is singular")
    return RatMatrix(tuple(row[n:] for row in reduced.entries))


def row_space_basis(m: RatMatrix) -> list[Vector]:
    """Canonical (reduced echelon) basis of the row space."""
    reduced, pivots = rref(m)
    return [reduced.entries[i] for i in range(len(pivots))]


def column_space_basis(m: RatMatrix) -> list[Vector]:
    return row_space_basis(m.transpose())


def span_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    return rank(RatMatrix.from_rows(vectors))


@dataclass(frozen=True)
class LinearInvolution:
    """Square rational matrix S with S^2 = I (validated at construction)."""

    matrix: RatMatrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise ValueError("involution matrix must be square")
        n = self.matrix.rows
        if self.matrix @ self.matrix != RatMatrix.identity(n):
            raise ValueError("not an involution: S^2 != I")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def __neg__(self) -> "LinearInvolution":
        return LinearInvolution(-self.matrix)


def eigensplit(s: LinearInvolution) -> tuple[list[Vector], list[Vector]]:
    """Canonical rational bases of the +1 and -1 eigenspaces of an involution.

    Computed from the projectors (I +/- S)/2 by column reduction; the two
    bases together always span the whole space.
    """
    n = s.dim
    ident = RatMatrix.identity(n)
    plus = column_space_basis((ident + s.matrix).scale(Fraction(1, 2)))
    minus = column_space_basis((ident - s.matrix).scale(Fraction(1, 2)))
    return plus, minus


def fixed_subspace(s: LinearInvolution) -> list[Vector]:
    """Basis of ker(S - I), i.e. the +1 eigenspace."""
    return eigensplit(s)[0]


@dataclass(frozen=True)
class SymplecticForm:
    """Antisymmetric nondegenerate bilinear form on Q^(2n)."""

    matrix: RatMatrix

    def __post_init__(self):
        m = self.matrix
        if not m.is_square or m.rows % 2 != 0:
            raise ValueError("symplectic form needs even square dimension")
        if m.transpose() != -m:
            raise ValueError("form is not antisymmetric")
        if rank(m) != m.rows:
            raise ValueError("form is degenerate")

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def pairing(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return dot(u, self.matrix.apply(v))


def standard_symplectic_form(dim: int) -> SymplecticForm:
    """Darboux form [[0, I], [-I, 0]] on Q^dim."""
    if dim % 2 != 0:
        raise ValueError("dimension must be even")
    n = dim // 2
    rows = []
    for i in range(dim):
        row = [Fraction(0)] * dim
        if i < n:
            row[n + i] = Fraction(1)
        else:
            row[i - n] = Fraction(-1)
        rows.append(row)
    return SymplecticForm(RatMatrix.from_rows(rows))


def is_lagrangian(subspace_basis: Sequence[Sequence[Fraction]], omega: SymplecticForm) -> bool:
    """True iff span(basis) is isotropic of dimension exactly dim/2."""
    for v in subspace_basis:
        if len(v) != omega.dim:
            raise ValueError("basis vector dimension does not match the form")
    if span_rank(subspace_basis) != omega.dim // 2:
        return False
    return all(omega.pairing(u, v) == 0
               for i, u in enumerate(subspace_basis)
               for v in subspace_basis[i:])


def _random_symplectic(dim: int, rng: random.Random, factors: int = 6) -> RatMatrix:
    """Product of elementary symplectic shears with small integer parameters."""
    n = dim // 2
    t = RatMatrix.identity(dim)
    for _ in range(factors):
        p = rng.choice([k for k in range(-9, 10) if k != 0])
        kind = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        block = [[Fraction(0)] * n for _ in range(n)]
        if kind < 2:
            # symmetric P: shear [[I, P], [0, I]] or [[I, 0], [P, I]]
            block[i][j] += p
            block[j][i] += p if i != j else 0
            rows = []
            for r in range(dim):
                row = [Fraction(int(r == c)) for c in range(dim)]
                if kind == 0 and r < n:
                    for c in range(n):
                        row[n + c] += block[r][c]
                elif kind == 1 and r >= n:
                    for c in range(n):
                        row[c] += block[r - n][c]
                rows.append(row)
            t = t @ RatMatrix.from_rows(rows)
        else:
            # GL factor diag(A, A^-T) with A an elementary shear
            if i == j:
                continue
            a = RatMatrix.identity(n).entries
            a = [list(r) for r in a]
            a[i][j] = Fraction(p)
            a_mat = RatMatrix.from_rows(a)
            a_inv_t = invert(a_mat).transpose()
            rows = []
            for r in range(dim):
                row = [Fraction(0)] * dim
                for c in range(dim):
                    if r < n and c < n:
                        row[c] = a_mat.entries[r][c]
                    elif r >= n and c >= n:
                        row[c] = a_inv_t.entries[r - n][c - n]
                rows.append(row)
            t = t @ RatMatrix.from_rows(rows)
    return t


def antisymplectic_involution_from_symplectic(t: RatMatrix) -> LinearInvolution:
    """Conjugate diag(I, -I) by a symplectic matrix: T^-1 diag(I,-I) T.

    The result squares to the identity and reverses the standard Darboux form.
    """
    dim = t.rows
    n = dim // 2
    d = RatMatrix.from_rows([[Fraction(int(i == j)) * (1 if i < n else -1)
                              for j in range(dim)] for i in range(dim)])
    return LinearInvolution(invert(t) @ d @ t)


def random_antisymplectic_involution(dim: int, seed: int) -> LinearInvolution:
    """Seeded random involution S with S^2 = I and S^T Omega S = -Omega.

    Deterministic for a given (dim, seed); all randomness is derived from the
    seed argument.
    """
    if dim % 2 != 0 or dim < 2:
        raise ValueError("dimension must be even and >= 2")
    rng = random.Random(seed)
    return antisymplectic_involution_from_symplectic(_random_symplectic(dim, rng))


def is_antisymplectic(s: LinearInvolution, omega: SymplecticForm) -> bool:
    return s.matrix.transpose() @ omega.matrix @ s.matrix == -omega.matrix


@dataclass(frozen=True)
class GaussianRational:
    """Element of Q(i) with exact field arithmetic."""

    re: Fraction
    im: Fraction = Fraction(0)

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(frac(re), frac(im))

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(i)")
        n = other.re * other.re + other.im * other.im
        num = self * other.conjugate()
        return GaussianRational(num.re / n, num.im / n)

    def __pow__(self, k: int) -> "GaussianRational":
        if k < 0:
            raise ValueError("negative powers not supported")
        out = GaussianRational(Fraction(1))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> "GaussianRational":
        c = frac(c)
        return GaussianRational(c * self.re, c * self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GAUSSIAN_ZERO = GaussianRational(Fraction(0))
GAUSSIAN_ONE = GaussianRational(Fraction(1))
