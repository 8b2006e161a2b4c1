"""Tensor form of operators: hats and their transposes, symmetric and skew
parts, invariance, the Yang-Baxter residuals and their operator-form
equivalences, and quadratic (invariant-form) transport."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Algebra, BimodNov, Grid, dual_context, regular_bimodule
from .errors import BetaNotSelfAdjoint, DegenerateForm, DimMismatch, NoHalf, SymPartNotInvariant
from .fields import Field
from .linalg import Matrix, inverse, vadd, vsub
from .operators import LinMap, MassParams, ext_o_residual, o_operator_residual
from .residual import Residual, ResidualCollector
from .tensors import Tensor2, Tensor3, flip, tensor3_combine


def hat_matrices(r: Tensor2) -> tuple[Matrix, Matrix]:
    """Matrices of r-hat and its transpose partner as maps A* -> A.

    Column i of the first is row i of the coefficient grid; the second is
    the hat of the flipped tensor, i.e. the plain grid read column-wise.
    """
    n = r.dim
    f = r.field
    hat = Matrix.from_cols(f, [r.grid[i] for i in range(n)], "A*", "A")
    hat_t = Matrix.from_cols(f, [r.col_of(j) for j in range(n)], "A*", "A")
    return hat, hat_t


def tensor_of_map(m: Matrix) -> Tensor2:
    """Inverse of the hat identification: grid[i][j] = <m(e_i*), e_j*>."""
    n = m.rows
    if m.cols != n:
        raise DimMismatch("only square maps A*->A correspond to tensors in A⊗A")
    return Tensor2(m.field, tuple(tuple(m.col(i)) for i in range(n)))


@dataclass(frozen=True)
class RTensor:
    """A 2-tensor with its cached operator data: hat, hat-transpose, the
    halved symmetric/skew parts and their hats.  Needs 1/2, so construction
    rejects characteristic 2."""

    alg: Algebra
    r: Tensor2
    hat: Matrix
    hat_t: Matrix
    r_minus: Tensor2
    r_plus: Tensor2
    alpha: LinMap
    beta: LinMap

    @classmethod
    def build(cls, alg: Algebra, r: Tensor2) -> "RTensor":
        f = alg.field
        if r.field != f:
            from .errors import FieldMismatch

            raise FieldMismatch("tensor and algebra over different fields")
        if r.dim != alg.dim:
            raise DimMismatch("tensor dimension does not match the algebra")
        if f.char == 2:
            raise NoHalf("symmetric/skew splitting needs 1/2")
        half = f.half()
        hat, hat_t = hat_matrices(r)
        tr = flip(r)
        r_minus = (r - tr).scale(half)
        r_plus = (r + tr).scale(half)
        alpha = LinMap((hat - hat_t).scale(half))
        beta = LinMap((hat + hat_t).scale(half))
        return cls(alg, r, hat, hat_t, r_minus, r_plus, alpha, beta)

    @property
    def field(self) -> Field:
        return self.alg.field


def invariance_residual(alg: Algebra, s: Tensor2, cross_check: bool = True) -> Residual:
    """(L(x)⊗id + id⊗L_star(x))s on every basis x.

    For symmetric s the report also cross-checks the operator
    characterizations (the hat being balanced, and being a module
    homomorphism into the regular actions); the three verdicts must agree.
    """
    f = alg.field
    n = alg.dim
    col = ResidualCollector(f, "invariance")
    for x in range(n):
        ex = alg.basis_vec(x)
        moved = s.apply_slot(0, alg.left_mul(ex)) + s.apply_slot(1, alg.star_mul(ex))
        for i in range(n):
            row = moved.grid[i]
            if any(not f.is_zero(c) for c in row):
                col.record("invariance", (x, i), row)
    report = col.done()
    if cross_check and s.is_symmetric():
        from .operators import balanced_residual, bimodule_hom_residual

        ctx = dual_context(alg, validate=False)
        shat = LinMap(hat_matrices(s)[0])
        balanced = balanced_residual(ctx, shat).is_zero
        homo = bimodule_hom_residual(ctx, shat).is_zero
        if not (balanced == homo == report.is_zero):
            raise AssertionError(
                "invariance characterizations disagree: "
                f"tensor={report.is_zero} balanced={balanced} hom={homo}"
            )
    return report


def nybe_residual(alg: Algebra, r: Tensor2) -> Tensor3:
    """r13∘r23 + r12⋆r23 + r13∘r12."""
    t = tensor3_combine(alg, r, r, "13o23")
    t = t + tensor3_combine(alg, r, r, "12s23")
    t = t + tensor3_combine(alg, r, r, "13o12")
    return t


def enybe_residual(alg: Algebra, r: Tensor2, epsilon) -> Tensor3:
    """LHS - RHS of the mass-epsilon extended equation; reduces to the plain
    residual when epsilon = 0 or r is skew."""
    f = alg.field
    epsilon = f.coerce(epsilon)
    lhs = nybe_residual(alg, r)
    if f.is_zero(epsilon):
        return lhs
    s = r + flip(r)
    rhs = tensor3_combine(alg, s, s, "13o23").scale(epsilon)
    return lhs - rhs


def o_nybe_residual(alg: Algebra, r: Tensor2) -> Residual:
    """Operator form of the tensor equation, on dual basis pairs:

    hat(a*)∘hat(b*) - hat(Lstar*(hat(a*))b* - (-R)*(hat_t(b*))a*).
    """
    f = alg.field
    n = alg.dim
    hat, hat_t = hat_matrices(r)
    ctx = dual_context(alg, validate=False)  # l = Lstar*, r = -R*
    col = ResidualCollector(f, "o-nybe")
    dual_basis = [tuple(f.one() if k == i else f.zero() for k in range(n)) for i in range(n)]
    for i in range(n):
        ha = hat.col(i)
        for j in range(n):
            hb = hat.col(j)
            lhs = alg.product(ha, hb)
            inner = ctx.l_of(ha).col(j)
            inner = vsub(f, inner, ctx.r_of(hat_t.col(j)).col(i))
            col.record("o-nybe", (i, j), vsub(f, lhs, hat.apply(inner)))
    return col.done()


def dual_pm_products(alg: Algebra, rt: RTensor) -> tuple[Grid, Grid]:
    """The two dual products a* ∘± b* = ∓2 Lstar*(beta(a*))b*.

    Requires the symmetric part to be invariant.
    """
    if not invariance_residual(alg, rt.r_plus, cross_check=False).is_zero:
        raise SymPartNotInvariant("symmetric part is not invariant")
    f = alg.field
    n = alg.dim
    ctx = dual_context(alg, validate=False)
    two = f.coerce(2)
    plus_rows, minus_rows = [], []
    for i in range(n):
        bi = rt.beta.mat.col(i)
        li = ctx.l_of(bi)
        prow, mrow = [], []
        for j in range(n):
            val = tuple(f.mul(two, c) for c in li.col(j))
            prow.append(tuple(f.neg(c) for c in val))
            mrow.append(val)
        plus_rows.append(tuple(prow))
        minus_rows.append(tuple(mrow))
    return tuple(plus_rows), tuple(minus_rows)


@dataclass(frozen=True)
class BilForm:
    """Symmetric bilinear form; phi is the induced map A -> A* whose matrix
    equals the coefficient grid."""

    field: Field
    grid: tuple

    def __post_init__(self):
        n = len(self.grid)
        rows = []
        for row in self.grid:
            if len(row) != n:
                raise DimMismatch("form grid must be square")
            rows.append(tuple(self.field.coerce(c) for c in row))
        object.__setattr__(self, "grid", tuple(rows))

    @property
    def dim(self) -> int:
        return len(self.grid)

    def is_symmetric(self) -> bool:
        f = self.field
        n = self.dim
        return all(
            f.is_zero(f.sub(self.grid[i][j], self.grid[j][i]))
            for i in range(n)
            for j in range(i + 1, n)
        )

    def value(self, a: Sequence, b: Sequence) -> object:
        f = self.field
        acc = f.zero()
        for i, ca in enumerate(a):
            if f.is_zero(ca):
                continue
            row = self.grid[i]
            for j, cb in enumerate(b):
                acc = f.add(acc, f.mul(f.mul(ca, cb), row[j]))
        return acc

    def phi(self) -> Matrix:
        return Matrix.from_rows(self.field, self.grid, "A", "A*")

    def is_nondegenerate(self) -> bool:
        from .linalg import rank

        return rank(self.phi()) == self.dim


def bilform_invariance(alg: Algebra, form: BilForm) -> tuple[Residual, bool]:
    """Invariance B(a∘b, c) + B(b, a⋆c) on basis triples, plus the full
    quadratic verdict (symmetric + nondegenerate + invariant)."""
    f = alg.field
    n = alg.dim
    col = ResidualCollector(f, "bilform-invariance")
    basis = [alg.basis_vec(i) for i in range(n)]
    for a in range(n):
        for b in range(n):
            ab = alg.mul[a][b]
            for c in range(n):
                star_ac = alg.basis_star(a, c)
                val = f.add(form.value(ab, basis[c]), form.value(basis[b], star_ac))
                col.record("invariant-form", (a, b, c), (val,))
    report = col.done()
    quadratic = report.is_zero and form.is_symmetric() and form.is_nondegenerate()
    return report, quadratic


def adjoint_residual(form: BilForm, t: LinMap, sign: int) -> Residual:
    """B(T(a), b) -/+ B(a, T(b)) as the matrix identity phi·T = ±T^t·phi."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    phi = form.phi()
    lhs = phi @ t.mat
    rhs = t.mat.transpose() @ phi
    diff = lhs - rhs if sign == 1 else lhs + rhs
    col = ResidualCollector(form.field, "adjoint")
    for i in range(diff.rows):
        row = diff.row(i)
        if any(not form.field.is_zero(c) for c in row):
            col.record("adjoint", (i,), row)
    return col.done()


@dataclass(frozen=True)
class QuadTransport:
    """Operators moved across a nondegenerate invariant form, with the
    assembled 2-tensors of their combinations."""

    p_t: LinMap  # T∘phi^{-1} : A* -> A
    p_beta: LinMap  # beta∘phi^{-1} : A* -> A
    delta_plus: Tensor2
    delta_minus: Tensor2


def quad_transport(alg: Algebra, form: BilForm, t: LinMap, beta: LinMap) -> QuadTransport:
    """P_T = T·phi^{-1}, P_beta = beta·phi^{-1} and the tensors of P_T ± P_beta.

    Hypothesis failures raise; conclusion checks live in the property suite.
    """
    if not form.is_symmetric():
        raise DegenerateForm("form must be symmetric")
    if not form.is_nondegenerate():
        raise DegenerateForm("form must be nondegenerate")
    rep, _ = bilform_invariance(alg, form)
    if not rep.is_zero:
        raise DegenerateForm("form must be invariant")
    if not adjoint_residual(form, beta, +1).is_zero:
        raise BetaNotSelfAdjoint("extension map must be self-adjoint")
    phi_inv = inverse(form.phi())
    p_t = LinMap(t.mat @ phi_inv)
    p_beta = LinMap(beta.mat @ phi_inv)
    plus = tensor_of_map(p_t.mat + p_beta.mat)
    minus = tensor_of_map(p_t.mat - p_beta.mat)
    return QuadTransport(p_t, p_beta, plus, minus)


def skew_nybe_operator_residual(alg: Algebra, r: Tensor2) -> Residual:
    """For skew r: the weight-0 operator identity of the hat on the dual
    actions, equivalent to the tensor equation."""
    ctx = dual_context(alg, validate=False)
    hat, _ = hat_matrices(r)
    return o_operator_residual(ctx, LinMap(hat), 0)
