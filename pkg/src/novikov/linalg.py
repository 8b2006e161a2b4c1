"""Dense exact vectors, matrices, reduced echelon form and kernels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimMismatch, FieldMismatch, SingularT
from .fields import Field


@dataclass(frozen=True, eq=False)
class Vec:
    """Coordinate vector over a based space.

    ``space`` is an optional tag ("A", "M", "A*", ...) used only for
    error messages and serialization round-trips; equality ignores it.
    """

    field: Field
    coords: tuple
    space: Optional[str] = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Vec)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.field.coerce(c) for c in self.coords))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.coords)

    def __add__(self, other: "Vec") -> "Vec":
        self._compat(other)
        f = self.field
        return Vec(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)), self.space)

    def __sub__(self, other: "Vec") -> "Vec":
        self._compat(other)
        f = self.field
        return Vec(f, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)), self.space)

    def __neg__(self) -> "Vec":
        f = self.field
        return Vec(f, tuple(f.neg(a) for a in self.coords), self.space)

    def scale(self, c) -> "Vec":
        f = self.field
        c = f.coerce(c)
        return Vec(f, tuple(f.mul(c, a) for a in self.coords), self.space)

    def _compat(self, other: "Vec"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if len(self.coords) != len(other.coords):
            raise DimMismatch(f"{len(self.coords)} vs {len(other.coords)}")


def _zeros(field: Field, n: int) -> tuple:
    z = field.zero()
    return (z,) * n


def vadd(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vsub(field: Field, u: Sequence, v: Sequence) -> tuple:
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vneg(field: Field, u: Sequence) -> tuple:
    return tuple(field.neg(a) for a in u)


def vscale(field: Field, c, u: Sequence) -> tuple:
    return tuple(field.mul(c, a) for a in u)


def vzero(field: Field, u: Sequence) -> bool:
    return all(field.is_zero(a) for a in u)


@dataclass(frozen=True, eq=False)
class Matrix:
    """Dense exact matrix; column j is the image of the j-th domain basis
    vector.  Domain/codomain tags are bookkeeping; equality ignores them."""

    field: Field
    rows: int
    cols: int
    entries: tuple  # row-major, length rows*cols
    domain: Optional[str] = None
    codomain: Optional[str] = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows, self.cols, self.entries))

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimMismatch("entry count does not match shape")
        object.__setattr__(self, "entries", tuple(self.field.coerce(c) for c in self.entries))

    @classmethod
    def from_rows(cls, field: Field, rows: Iterable[Sequence], domain=None, codomain=None) -> "Matrix":
        rows = [tuple(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        if any(len(r) != nc for r in rows):
            raise DimMismatch("ragged rows")
        flat = tuple(c for r in rows for c in r)
        return cls(field, nr, nc, flat, domain, codomain)

    @classmethod
    def from_cols(cls, field: Field, cols: Iterable[Sequence], domain=None, codomain=None) -> "Matrix":
        cols = [tuple(c) for c in cols]
        if not cols:
            return cls(field, 0, 0, (), domain, codomain)
        nr = len(cols[0])
        rows = [[col[i] for col in cols] for i in range(nr)]
        return cls.from_rows(field, rows, domain, codomain)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int, domain=None, codomain=None) -> "Matrix":
        return cls(field, rows, cols, _zeros(field, rows * cols), domain, codomain)

    @classmethod
    def identity(cls, field: Field, n: int, space=None) -> "Matrix":
        one, zero = field.one(), field.zero()
        flat = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(field, n, n, flat, space, space)

    def __getitem__(self, ij) -> object:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_list(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(self.field.is_zero(c) for c in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        f = self.field
        flat = tuple(f.add(a, b) for a, b in zip(self.entries, other.entries))
        return Matrix(f, self.rows, self.cols, flat, self.domain, self.codomain)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compat(other)
        f = self.field
        flat = tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries))
        return Matrix(f, self.rows, self.cols, flat, self.domain, self.codomain)

    def __neg__(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.rows, self.cols, tuple(f.neg(a) for a in self.entries), self.domain, self.codomain)

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(f, self.rows, self.cols, tuple(f.mul(c, a) for a in self.entries), self.domain, self.codomain)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.cols != other.rows:
            raise DimMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                acc = f.zero()
                for k in range(self.cols):
                    acc = f.add(acc, f.mul(ri[k], other.entries[k * other.cols + j]))
                out.append(acc)
        return Matrix(f, self.rows, other.cols, tuple(out), other.domain, self.codomain)

    def apply(self, coords: Sequence) -> tuple:
        """Matrix times coordinate tuple."""
        if len(coords) != self.cols:
            raise DimMismatch(f"matrix has {self.cols} columns, vector has {len(coords)}")
        f = self.field
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            acc = f.zero()
            for k in range(self.cols):
                acc = f.add(acc, f.mul(ri[k], coords[k]))
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "Matrix":
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.field, self.cols, self.rows, flat, self.codomain, self.domain)

    def _compat(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimMismatch("shape mismatch")


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form with leftmost pivots normalized to 1."""
    f = m.field
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots: list[int] = []
    pr = 0
    for pc in range(m.cols):
        pivot_row = None
        for i in range(pr, m.rows):
            if not f.is_zero(rows[i][pc]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = f.inv(rows[pr][pc])
        rows[pr] = [f.mul(inv, c) for c in rows[pr]]
        for i in range(m.rows):
            if i != pr and not f.is_zero(rows[i][pc]):
                factor = rows[i][pc]
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.rows:
            break
    return Matrix.from_rows(f, rows, m.domain, m.codomain), pivots


def kernel_basis(m: Matrix, space: Optional[str] = None) -> list[Vec]:
    """Deterministic basis of the null space via reduced echelon form."""
    f = m.field
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for free in free_cols:
        coords = [f.zero()] * m.cols
        coords[free] = f.one()
        for r, pc in enumerate(pivots):
            coords[pc] = f.neg(red[r, free])
        basis.append(Vec(f, tuple(coords), space or m.domain))
    return basis


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def column_space_pivots(m: Matrix) -> list[int]:
    """Indices of the leftmost-pivot column basis of the column space."""
    return rref(m)[1]


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularT if the matrix is not invertible."""
    if m.rows != m.cols:
        raise DimMismatch("only square matrices invert")
    f = m.field
    n = m.rows
    aug = Matrix.from_rows(
        f, [list(m.row(i)) + list(Matrix.identity(f, n).row(i)) for i in range(n)]
    )
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularT("matrix is singular")
    rows = [red.row(i)[n:] for i in range(n)]
    return Matrix.from_rows(f, rows, m.codomain, m.domain)


def solve_right(m: Matrix, target: Sequence) -> Optional[tuple]:
    """One solution x of m @ x = target, or None if inconsistent."""
    f = m.field
    aug = Matrix.from_rows(f, [list(m.row(i)) + [target[i]] for i in range(m.rows)])
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [f.zero()] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r, m.cols]
    return tuple(x)
