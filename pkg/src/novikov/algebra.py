"""Novikov algebras by structure constants, their bimodules, bimodule
Novikov algebras, and the canonical constructions (star, regular actions,
dual bimodule, semidirect product)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimMismatch, FieldMismatch, ModuleNotNovikov, NotABimodule, NotNovikov
from .fields import Field
from .linalg import Matrix, vadd, vzero
from .residual import Residual, ResidualCollector

Grid = tuple  # grid[i][j] = coordinate tuple of e_i * e_j


def coerce_grid(field: Field, grid, dim_left: int, dim_right: Optional[int] = None, dim_out: Optional[int] = None) -> Grid:
    """Canonicalize a bilinear product grid and validate its shape."""
    dim_right = dim_left if dim_right is None else dim_right
    dim_out = dim_left if dim_out is None else dim_out
    if len(grid) != dim_left:
        raise DimMismatch("grid has wrong number of rows")
    rows = []
    for row in grid:
        if len(row) != dim_right:
            raise DimMismatch("grid has wrong number of columns")
        cells = []
        for cell in row:
            if len(cell) != dim_out:
                raise DimMismatch("grid cell has wrong length")
            cells.append(tuple(field.coerce(c) for c in cell))
        rows.append(tuple(cells))
    return tuple(rows)


def zero_grid(field: Field, dim_left: int, dim_right: Optional[int] = None, dim_out: Optional[int] = None) -> Grid:
    dim_right = dim_left if dim_right is None else dim_right
    dim_out = dim_left if dim_out is None else dim_out
    z = (field.zero(),) * dim_out
    return tuple((z,) * dim_right for _ in range(dim_left))


def grid_product(field: Field, grid: Grid, u: Sequence, v: Sequence) -> tuple:
    """Bilinear extension of a product grid to coordinate tuples."""
    dim_out = len(grid[0][0]) if grid and grid[0] else 0
    out = [field.zero()] * dim_out
    for i, cu in enumerate(u):
        if field.is_zero(cu):
            continue
        row = grid[i]
        for j, cv in enumerate(v):
            if field.is_zero(cv):
                continue
            c = field.mul(cu, cv)
            cell = row[j]
            for k in range(dim_out):
                if not field.is_zero(cell[k]):
                    out[k] = field.add(out[k], field.mul(c, cell[k]))
    return tuple(out)


def grids_equal(field: Field, g1: Grid, g2: Grid) -> bool:
    if len(g1) != len(g2):
        return False
    for r1, r2 in zip(g1, g2):
        if len(r1) != len(r2):
            return False
        for c1, c2 in zip(r1, r2):
            if len(c1) != len(c2):
                return False
            if any(not field.is_zero(field.sub(a, b)) for a, b in zip(c1, c2)):
                return False
    return True


@dataclass(frozen=True)
class Algebra:
    """Bilinear product on k^dim given by mul[i][j] = coordinates of e_i∘e_j.

    Construction never validates the Novikov identities; candidates whose
    failure is the interesting output are first-class values.  Use
    ``novikov_residual`` to check.
    """

    field: Field
    dim: int
    mul: Grid
    labels: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "mul", coerce_grid(self.field, self.mul, self.dim))

    @classmethod
    def zero(cls, field: Field, dim: int) -> "Algebra":
        return cls(field, dim, zero_grid(field, dim))

    @classmethod
    def from_table(cls, field: Field, table: dict, dim: int) -> "Algebra":
        """Build from a sparse {(i, j): coords} table, zero elsewhere."""
        grid = [[list((field.zero(),) * dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coords in table.items():
            grid[i][j] = [field.coerce(c) for c in coords]
        return cls(field, dim, tuple(tuple(tuple(c) for c in row) for row in grid))

    def basis_product(self, i: int, j: int) -> tuple:
        return self.mul[i][j]

    def basis_star(self, i: int, j: int) -> tuple:
        f = self.field
        return vadd(f, self.mul[i][j], self.mul[j][i])

    def product(self, u: Sequence, v: Sequence) -> tuple:
        return grid_product(self.field, self.mul, u, v)

    def star(self, u: Sequence, v: Sequence) -> tuple:
        f = self.field
        return vadd(f, self.product(u, v), self.product(v, u))

    def basis_vec(self, i: int) -> tuple:
        return tuple(self.field.one() if k == i else self.field.zero() for k in range(self.dim))

    def left_mul(self, a: Sequence) -> Matrix:
        """L(a): b -> a∘b."""
        cols = [self.product(a, self.basis_vec(j)) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, "A", "A")

    def right_mul(self, a: Sequence) -> Matrix:
        """R(a): b -> b∘a."""
        cols = [self.product(self.basis_vec(j), a) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, "A", "A")

    def star_mul(self, a: Sequence) -> Matrix:
        return self.left_mul(a) + self.right_mul(a)


def star(alg: Algebra) -> Grid:
    """The symmetrized product grid s[i][j] = mul[i][j] + mul[j][i]."""
    n = alg.dim
    return tuple(tuple(alg.basis_star(i, j) for j in range(n)) for i in range(n))


def star_algebra(alg: Algebra) -> Algebra:
    return Algebra(alg.field, alg.dim, star(alg))


def lr_matrices(alg: Algebra, a: Sequence) -> tuple[Matrix, Matrix, Matrix]:
    """(L(a), R(a), L_star(a)) for a coordinate vector a."""
    left = alg.left_mul(a)
    right = alg.right_mul(a)
    return left, right, left + right


def novikov_residual(alg: Algebra) -> Residual:
    """Left-symmetry and right-commutativity residuals on all basis triples."""
    f = alg.field
    n = alg.dim
    col = ResidualCollector(f, "novikov")
    basis = [alg.basis_vec(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            ij = alg.mul[i][j]
            ji = alg.mul[j][i]
            for k in range(n):
                ek = basis[k]
                # (a∘b)∘c - a∘(b∘c) - (b∘a)∘c + b∘(a∘c)
                lhs = alg.product(ij, ek)
                lhs = tuple(f.sub(x, y) for x, y in zip(lhs, alg.product(basis[i], alg.mul[j][k])))
                lhs = tuple(f.sub(x, y) for x, y in zip(lhs, alg.product(ji, ek)))
                lhs = tuple(f.add(x, y) for x, y in zip(lhs, alg.product(basis[j], alg.mul[i][k])))
                col.record("left-symmetry", (i, j, k), lhs)
                # (a∘b)∘c - (a∘c)∘b
                rc = tuple(
                    f.sub(x, y)
                    for x, y in zip(alg.product(ij, ek), alg.product(alg.mul[i][k], basis[j]))
                )
                col.record("right-commutativity", (i, j, k), rc)
    return col.done()


def is_novikov(alg: Algebra) -> bool:
    return novikov_residual(alg).is_zero


@dataclass(frozen=True)
class Bimodule:
    """Linear actions l, r of an algebra on a module, stored as matrices of
    the basis actions: l_mats[i] is the action of e_i, extended linearly."""

    alg: Algebra
    mdim: int
    l_mats: tuple  # dim matrices, each mdim x mdim
    r_mats: tuple

    def __post_init__(self):
        if len(self.l_mats) != self.alg.dim or len(self.r_mats) != self.alg.dim:
            raise DimMismatch("one action matrix per algebra basis element")
        for m in (*self.l_mats, *self.r_mats):
            if m.field != self.alg.field:
                raise FieldMismatch("action matrices over the wrong field")
            if m.rows != self.mdim or m.cols != self.mdim:
                raise DimMismatch("action matrices must be mdim x mdim")

    @property
    def field(self) -> Field:
        return self.alg.field

    def l_of(self, a: Sequence) -> Matrix:
        return _combine_mats(self.field, self.l_mats, a, self.mdim)

    def r_of(self, a: Sequence) -> Matrix:
        return _combine_mats(self.field, self.r_mats, a, self.mdim)

    def l_act(self, a: Sequence, v: Sequence) -> tuple:
        return self.l_of(a).apply(v)

    def r_act(self, a: Sequence, v: Sequence) -> tuple:
        return self.r_of(a).apply(v)

    def with_product(self, mul: Grid) -> "BimodNov":
        return BimodNov(self.alg, self.mdim, self.l_mats, self.r_mats, mul)

    def trivial(self) -> "BimodNov":
        return self.with_product(zero_grid(self.field, self.mdim))


def _combine_mats(field: Field, mats: tuple, a: Sequence, mdim: int) -> Matrix:
    out = Matrix.zeros(field, mdim, mdim)
    for i, c in enumerate(a):
        if not field.is_zero(c):
            out = out + mats[i].scale(c)
    return out


@dataclass(frozen=True)
class BimodNov(Bimodule):
    """A bimodule whose module space carries its own bilinear product."""

    mul: Grid = None  # set in __post_init__; pass a grid or use Bimodule.trivial()

    def __post_init__(self):
        super().__post_init__()
        mul = self.mul if self.mul is not None else zero_grid(self.field, self.mdim)
        object.__setattr__(self, "mul", coerce_grid(self.field, mul, self.mdim))

    def module_product(self, u: Sequence, v: Sequence) -> tuple:
        return grid_product(self.field, self.mul, u, v)

    def module_algebra(self) -> Algebra:
        return Algebra(self.field, self.mdim, self.mul)

    def module_basis(self, i: int) -> tuple:
        return tuple(self.field.one() if k == i else self.field.zero() for k in range(self.mdim))


def bimodule_residual(b: Bimodule) -> Residual:
    """The four bimodule identities evaluated on basis pairs times module basis."""
    f = b.field
    n = b.alg.dim
    col = ResidualCollector(f, "bimodule")
    lm = b.l_mats
    rm = b.r_mats
    for i in range(n):
        for j in range(n):
            lij = b.l_of(b.alg.mul[i][j])
            lji = b.l_of(b.alg.mul[j][i])
            rij = b.r_of(b.alg.mul[i][j])
            # l(a∘b-b∘a) = l(a)l(b) - l(b)l(a)
            m1 = (lij - lji) - (lm[i] @ lm[j] - lm[j] @ lm[i])
            # l(a)r(b) - r(b)l(a) = r(a∘b) - r(b)r(a)
            m2 = (lm[i] @ rm[j] - rm[j] @ lm[i]) - (rij - rm[j] @ rm[i])
            # l(a∘b) = r(b)l(a)
            m3 = lij - rm[j] @ lm[i]
            # r(a)r(b) = r(b)r(a)
            m4 = rm[i] @ rm[j] - rm[j] @ rm[i]
            for name, m in (("l-commutator", m1), ("mixed", m2), ("l-of-product", m3), ("r-commute", m4)):
                if not m.is_zero():
                    for v in range(b.mdim):
                        cv = m.col(v)
                        col.record(name, (i, j, v), cv)
    return col.done()


def abnova_residual(b: BimodNov, require_pre: bool = True) -> Residual:
    """The four compatibility identities between the actions and the module
    product, on top of the bimodule identities and module Novikov-ness.

    With ``require_pre`` the preconditions are enforced as errors; without it
    all residuals are merged into the report (used by equivalence sweeps).
    """
    f = b.field
    base = bimodule_residual(b)
    mod_nov = novikov_residual(b.module_algebra())
    if require_pre:
        if not base.is_zero:
            raise NotABimodule("actions fail the bimodule identities")
        if not mod_nov.is_zero:
            raise ModuleNotNovikov("module product is not Novikov")
    col = ResidualCollector(f, "abnova")
    n = b.alg.dim
    m = b.mdim
    mb = [b.module_basis(i) for i in range(m)]
    for a in range(n):
        la = b.l_mats[a]
        ra = b.r_mats[a]
        for v in range(m):
            lav = la.col(v)
            rav = ra.col(v)
            for w in range(m):
                law = la.col(w)
                raw_ = ra.col(w)
                vw = b.mul[v][w]
                wv = b.mul[w][v]
                # (l(a)v)·w - l(a)(v·w) = (r(a)v)·w - v·(l(a)w)
                e1 = _sub4(
                    f,
                    b.module_product(lav, mb[w]),
                    la.apply(vw),
                    b.module_product(rav, mb[w]),
                    b.module_product(mb[v], law),
                    "balanced-action",
                )
                col.record("action-vs-product", (a, v, w), e1)
                # r(a)(v·w) - v·(r(a)w) = r(a)(w·v) - w·(r(a)v)
                e2 = _sub4(
                    f,
                    ra.apply(vw),
                    b.module_product(mb[v], raw_),
                    ra.apply(wv),
                    b.module_product(mb[w], rav),
                    "",
                )
                col.record("right-action-symmetry", (a, v, w), e2)
                # (l(a)v)·w = (l(a)w)·v
                e3 = tuple(
                    f.sub(x, y)
                    for x, y in zip(b.module_product(lav, mb[w]), b.module_product(law, mb[v]))
                )
                col.record("left-action-commutes", (a, v, w), e3)
                # r(a)(v·w) = (r(a)v)·w
                e4 = tuple(f.sub(x, y) for x, y in zip(ra.apply(vw), b.module_product(rav, mb[w])))
                col.record("right-action-product", (a, v, w), e4)
    rep = col.done()
    if require_pre:
        return rep
    return Residual("abnova", base.failures + mod_nov.failures + rep.failures)


def _sub4(f, t1, t2, t3, t4, _name):
    # t1 - t2 - t3 + t4
    return tuple(f.add(f.sub(f.sub(a, b), c), d) for a, b, c, d in zip(t1, t2, t3, t4))


def regular(alg: Algebra, validate: bool = True) -> BimodNov:
    """The regular bimodule Novikov algebra (A, ∘, L, R)."""
    if validate and not novikov_residual(alg).is_zero:
        raise NotNovikov("base algebra fails the Novikov identities")
    n = alg.dim
    l_mats = tuple(alg.left_mul(alg.basis_vec(i)) for i in range(n))
    r_mats = tuple(alg.right_mul(alg.basis_vec(i)) for i in range(n))
    return BimodNov(alg, n, l_mats, r_mats, alg.mul)


def regular_bimodule(alg: Algebra) -> Bimodule:
    n = alg.dim
    l_mats = tuple(alg.left_mul(alg.basis_vec(i)) for i in range(n))
    r_mats = tuple(alg.right_mul(alg.basis_vec(i)) for i in range(n))
    return Bimodule(alg, n, l_mats, r_mats)


def dual_bimodule(b: Bimodule, validate: bool = True) -> Bimodule:
    """The dual bimodule on V*: l' = -(l+r)^T, r' = +r^T, dual basis in primal order."""
    if validate and not bimodule_residual(b).is_zero:
        raise NotABimodule("dual construction needs a valid bimodule")
    l_mats = tuple(-(lm + rm).transpose() for lm, rm in zip(b.l_mats, b.r_mats))
    r_mats = tuple(rm.transpose() for rm in b.r_mats)
    return Bimodule(b.alg, b.mdim, l_mats, r_mats)


def dual_context(alg: Algebra, validate: bool = True) -> BimodNov:
    """(A*, L_star-dual, -R-dual) with the trivial module product."""
    return dual_bimodule(regular_bimodule(alg), validate=validate).trivial()


def semidirect(b: BimodNov) -> Algebra:
    """Product on A⊕M: (a+u)•(b+v) = a∘b + l(a)v + r(b)u + u·v, A-basis first."""
    f = b.field
    n = b.alg.dim
    m = b.mdim
    dim = n + m
    z_a = (f.zero(),) * n
    z_m = (f.zero(),) * m
    grid = []
    for i in range(dim):
        row = []
        for j in range(dim):
            if i < n and j < n:
                a_part = b.alg.mul[i][j]
                m_part = z_m
            elif i < n:
                a_part = z_a
                m_part = b.l_mats[i].col(j - n)
            elif j < n:
                a_part = z_a
                m_part = b.r_mats[j].col(i - n)
            else:
                a_part = z_a
                m_part = b.mul[i - n][j - n]
            row.append(a_part + m_part)
        grid.append(tuple(row))
    return Algebra(f, dim, tuple(grid))
