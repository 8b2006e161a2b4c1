"""Linear maps from a module into the algebra and the predicates attached to
them: balanced, invariant, equivalent, the weighted operator identity and its
extension, plus every product those maps induce."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import Algebra, BimodNov, Grid, grid_product, regular
from .errors import DimMismatch, NoHalf
from .fields import Field
from .linalg import Matrix, vadd, vsub
from .residual import Residual, ResidualCollector


@dataclass(frozen=True)
class LinMap:
    """A linear map M -> A, columns = images of the module basis."""

    mat: Matrix

    @classmethod
    def from_cols(cls, field: Field, cols, domain="M", codomain="A") -> "LinMap":
        return cls(Matrix.from_cols(field, cols, domain, codomain))

    @classmethod
    def zero(cls, field: Field, dim: int, mdim: int) -> "LinMap":
        return cls(Matrix.zeros(field, dim, mdim, "M", "A"))

    @classmethod
    def identity(cls, field: Field, dim: int) -> "LinMap":
        return cls(Matrix.identity(field, dim))

    @property
    def field(self) -> Field:
        return self.mat.field

    @property
    def dim(self) -> int:
        return self.mat.rows

    @property
    def mdim(self) -> int:
        return self.mat.cols

    def __call__(self, u: Sequence) -> tuple:
        return self.mat.apply(u)

    def __add__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.mat + other.mat)

    def __sub__(self, other: "LinMap") -> "LinMap":
        return LinMap(self.mat - other.mat)

    def __neg__(self) -> "LinMap":
        return LinMap(-self.mat)

    def scale(self, c) -> "LinMap":
        return LinMap(self.mat.scale(c))

    def is_zero(self) -> bool:
        return self.mat.is_zero()


@dataclass(frozen=True)
class MassParams:
    """(weight, kappa, mu, epsilon) bundle; epsilon only matters for the
    tensor-equation checks."""

    weight: object = 0
    kappa: object = 0
    mu: object = 0
    epsilon: object = 0

    def coerced(self, field: Field) -> "MassParams":
        return MassParams(
            field.coerce(self.weight),
            field.coerce(self.kappa),
            field.coerce(self.mu),
            field.coerce(self.epsilon),
        )


def _check_ctx_map(ctx: BimodNov, m: LinMap) -> None:
    if m.mat.rows != ctx.alg.dim or m.mat.cols != ctx.mdim:
        raise DimMismatch(
            f"map is {m.mat.rows}x{m.mat.cols}, context wants {ctx.alg.dim}x{ctx.mdim}"
        )


def balanced_residual(ctx: BimodNov, beta: LinMap) -> Residual:
    """l(beta(u))v - r(beta(v))u on module basis pairs."""
    _check_ctx_map(ctx, beta)
    f = ctx.field
    m = ctx.mdim
    col = ResidualCollector(f, "balanced")
    imgs = [beta(ctx.module_basis(i)) for i in range(m)]
    for u in range(m):
        lu = ctx.l_of(imgs[u])
        for v in range(m):
            rv = ctx.r_of(imgs[v])
            val = vsub(f, lu.col(v), rv.col(u))
            col.record("balanced", (u, v), val)
    return col.done()


def invariant_residual(ctx: BimodNov, beta: LinMap, kappa) -> Residual:
    """kappa-scaled invariance; identically zero when kappa = 0."""
    _check_ctx_map(ctx, beta)
    f = ctx.field
    kappa = f.coerce(kappa)
    col = ResidualCollector(f, "invariant")
    if f.is_zero(kappa):
        return col.done()
    rep = bimodule_hom_residual(ctx, beta)
    scaled = tuple(
        type(fail)(fail.identity, fail.indices, tuple(f.mul(kappa, c) for c in fail.value))
        for fail in rep.failures
    )
    return Residual("invariant", scaled)


def bimodule_hom_residual(ctx: BimodNov, beta: LinMap) -> Residual:
    """beta(l(x)u) = x∘beta(u) and beta(r(x)u) = beta(u)∘x on basis pairs."""
    _check_ctx_map(ctx, beta)
    f = ctx.field
    n = ctx.alg.dim
    m = ctx.mdim
    col = ResidualCollector(f, "bimodule-hom")
    for x in range(n):
        ex = ctx.alg.basis_vec(x)
        lx = ctx.l_mats[x]
        rx = ctx.r_mats[x]
        for u in range(m):
            bu = beta(ctx.module_basis(u))
            left = vsub(f, ctx.alg.product(ex, bu), beta(lx.col(u)))
            col.record("hom-left", (x, u), left)
            right = vsub(f, ctx.alg.product(bu, ex), beta(rx.col(u)))
            col.record("hom-right", (x, u), right)
    return col.done()


def is_balanced_hom(ctx: BimodNov, beta: LinMap) -> bool:
    return balanced_residual(ctx, beta).is_zero and bimodule_hom_residual(ctx, beta).is_zero


def equivalent_residual(ctx: BimodNov, beta: LinMap, mu) -> Residual:
    """mu-scaled equivalence identities on module basis triples."""
    _check_ctx_map(ctx, beta)
    f = ctx.field
    mu = f.coerce(mu)
    col = ResidualCollector(f, "equivalent")
    if f.is_zero(mu):
        return col.done()
    m = ctx.mdim
    mb = [ctx.module_basis(i) for i in range(m)]
    imgs = [beta(mb[i]) for i in range(m)]
    for u in range(m):
        for v in range(m):
            uv = ctx.mul[u][v]
            lb_uv = ctx.l_of(beta(uv))
            lu_v = ctx.l_of(imgs[u]).col(v)
            for w in range(m):
                # l(beta(u·v))w = (l(beta(u))v)·w
                e1 = vsub(f, lb_uv.col(w), ctx.module_product(lu_v, mb[w]))
                col.record("equiv-left", (u, v, w), tuple(f.mul(mu, c) for c in e1))
                # r(beta(v·w))u = u·(r(beta(w))v)
                vw = ctx.mul[v][w]
                rb_vw = ctx.r_of(beta(vw))
                rw_v = ctx.r_of(imgs[w]).col(v)
                e2 = vsub(f, rb_vw.col(u), ctx.module_product(mb[u], rw_v))
                col.record("equiv-right", (u, v, w), tuple(f.mul(mu, c) for c in e2))
    return col.done()


def ext_o_equation_residual(ctx: BimodNov, alpha: LinMap, beta: Optional[LinMap], params: MassParams) -> Residual:
    """Residual of the extended operator equation alone, on module basis pairs:

    alpha(u)∘alpha(v) - alpha(l(alpha(u))v + r(alpha(v))u + weight·u·v)
        - kappa·beta(u)∘beta(v) - mu·beta(u·v)
    """
    _check_ctx_map(ctx, alpha)
    f = ctx.field
    p = params.coerced(f)
    m = ctx.mdim
    col = ResidualCollector(f, "ext-o-equation")
    mb = [ctx.module_basis(i) for i in range(m)]
    a_imgs = [alpha(mb[i]) for i in range(m)]
    b_imgs = None
    if beta is not None and not beta.is_zero():
        _check_ctx_map(ctx, beta)
        b_imgs = [beta(mb[i]) for i in range(m)]
    for u in range(m):
        for v in range(m):
            lhs = ctx.alg.product(a_imgs[u], a_imgs[v])
            inner = vadd(f, ctx.l_of(a_imgs[u]).col(v), ctx.r_of(a_imgs[v]).col(u))
            uv = ctx.mul[u][v]
            inner = vadd(f, inner, tuple(f.mul(p.weight, c) for c in uv))
            lhs = vsub(f, lhs, alpha(inner))
            if b_imgs is not None:
                bb = ctx.alg.product(b_imgs[u], b_imgs[v])
                lhs = vsub(f, lhs, tuple(f.mul(p.kappa, c) for c in bb))
                lhs = vsub(f, lhs, tuple(f.mul(p.mu, c) for c in beta(uv)))
            col.record("ext-o", (u, v), lhs)
    return col.done()


@dataclass(frozen=True)
class ExtOReport:
    """All four residuals behind the extended-operator verdict."""

    equation: Residual
    balanced: Residual
    invariant: Residual
    equivalent: Residual

    @property
    def is_zero(self) -> bool:
        return (
            self.equation.is_zero
            and self.balanced.is_zero
            and self.invariant.is_zero
            and self.equivalent.is_zero
        )

    def merged(self) -> Residual:
        return Residual(
            "ext-o",
            self.equation.failures
            + self.balanced.failures
            + self.invariant.failures
            + self.equivalent.failures,
        )


def ext_o_residual(
    ctx: BimodNov,
    alpha: LinMap,
    beta: Optional[LinMap],
    params: MassParams,
    equation_only: bool = False,
) -> ExtOReport:
    """Extended-operator verdict: the equation residual plus the three
    side conditions on beta.  ``equation_only`` skips the side conditions
    (negative-testing mode)."""
    f = ctx.field
    p = params.coerced(f)
    eq = ext_o_equation_residual(ctx, alpha, beta, p)
    empty = Residual("skipped")
    if equation_only or beta is None or beta.is_zero():
        return ExtOReport(eq, empty, empty, empty)
    return ExtOReport(
        eq,
        balanced_residual(ctx, beta),
        invariant_residual(ctx, beta, p.kappa),
        equivalent_residual(ctx, beta, p.mu),
    )


def o_operator_residual(ctx: BimodNov, alpha: LinMap, weight) -> Residual:
    """Weight-lambda operator identity (extension-free)."""
    return ext_o_equation_residual(ctx, alpha, None, MassParams(weight=weight))


def is_o_operator(ctx: BimodNov, alpha: LinMap, weight) -> bool:
    return o_operator_residual(ctx, alpha, weight).is_zero


def rota_baxter_residual(alg: Algebra, t: LinMap, weight) -> Residual:
    """Rota-Baxter identity of the given weight on the regular context."""
    return o_operator_residual(regular(alg, validate=False), t, weight)


def is_rota_baxter(alg: Algebra, t: LinMap, weight) -> bool:
    return rota_baxter_residual(alg, t, weight).is_zero


def star_product(ctx: BimodNov, alpha: LinMap, weight) -> tuple[Grid, Residual]:
    """u*v = l(alpha(u))v + r(alpha(v))u + weight·u·v, with the two closure
    identities whose vanishing makes the product Novikov."""
    _check_ctx_map(ctx, alpha)
    f = ctx.field
    weight = f.coerce(weight)
    m = ctx.mdim
    mb = [ctx.module_basis(i) for i in range(m)]
    imgs = [alpha(mb[i]) for i in range(m)]
    grid = []
    for u in range(m):
        row = []
        lu = ctx.l_of(imgs[u])
        for v in range(m):
            val = vadd(f, lu.col(v), ctx.r_of(imgs[v]).col(u))
            val = vadd(f, val, tuple(f.mul(weight, c) for c in ctx.mul[u][v]))
            row.append(val)
        grid.append(tuple(row))
    grid = tuple(grid)

    # defect D(u,v) = alpha(u*v) - alpha(u)∘alpha(v)
    defect = [
        [vsub(f, alpha(grid[u][v]), ctx.alg.product(imgs[u], imgs[v])) for v in range(m)]
        for u in range(m)
    ]
    col = ResidualCollector(f, "star-closure")
    for u in range(m):
        for v in range(m):
            lduv = ctx.l_of(defect[u][v])
            for w in range(m):
                e1 = vsub(f, lduv.col(w), ctx.l_of(defect[u][w]).col(v))
                col.record("closure-1", (u, v, w), e1)
                e2 = vsub(f, lduv.col(w), ctx.l_of(defect[v][u]).col(w))
                e2 = vsub(f, e2, ctx.r_of(defect[v][w]).col(u))
                e2 = vadd(f, e2, ctx.r_of(defect[u][w]).col(v))
                col.record("closure-2", (u, v, w), e2)
    return grid, col.done()


def diamond_product(
    ctx: BimodNov, delta_plus: LinMap, delta_minus: LinMap, weight
) -> tuple[Grid, LinMap, LinMap]:
    """u⋄v = l(δ+(u))v + r(δ-(v))u + weight·u·v plus the recovered
    symmetrizer/antisymmetrizer pair ((δ+ + δ-)/2, (δ+ - δ-)/2)."""
    _check_ctx_map(ctx, delta_plus)
    _check_ctx_map(ctx, delta_minus)
    f = ctx.field
    half = f.half()  # raises NoHalf over F_2
    weight = f.coerce(weight)
    m = ctx.mdim
    mb = [ctx.module_basis(i) for i in range(m)]
    plus_imgs = [delta_plus(mb[i]) for i in range(m)]
    minus_imgs = [delta_minus(mb[i]) for i in range(m)]
    grid = []
    for u in range(m):
        lu = ctx.l_of(plus_imgs[u])
        row = []
        for v in range(m):
            val = vadd(f, lu.col(v), ctx.r_of(minus_imgs[v]).col(u))
            val = vadd(f, val, tuple(f.mul(weight, c) for c in ctx.mul[u][v]))
            row.append(val)
        grid.append(tuple(row))
    alpha = (delta_plus + delta_minus).scale(half)
    beta = (delta_plus - delta_minus).scale(half)
    return tuple(grid), alpha, beta


def pm_products(ctx: BimodNov, beta: LinMap, weight) -> tuple[Grid, Grid]:
    """The two twisted products u ·± v = weight·u·v ∓ 2 l(beta(u))v."""
    _check_ctx_map(ctx, beta)
    f = ctx.field
    if f.char == 2:
        raise NoHalf("the ± products degenerate in characteristic 2")
    weight = f.coerce(weight)
    two = f.coerce(2)
    m = ctx.mdim
    mb = [ctx.module_basis(i) for i in range(m)]
    plus = []
    minus = []
    for u in range(m):
        lbu = ctx.l_of(beta(mb[u]))
        prow = []
        mrow = []
        for v in range(m):
            base = tuple(f.mul(weight, c) for c in ctx.mul[u][v])
            shift = tuple(f.mul(two, c) for c in lbu.col(v))
            prow.append(vsub(f, base, shift))
            mrow.append(vadd(f, base, shift))
        plus.append(tuple(prow))
        minus.append(tuple(mrow))
    return tuple(plus), tuple(minus)


def pm_contexts(ctx: BimodNov, beta: LinMap, weight) -> tuple[BimodNov, BimodNov]:
    """The ± products packaged with the ambient actions as module contexts."""
    plus, minus = pm_products(ctx, beta, weight)
    return ctx.with_product(plus), ctx.with_product(minus)


def circ_t(alg: Algebra, t: LinMap, weight) -> Algebra:
    """The candidate product x∘_T y = T(x)∘y + x∘T(y) + weight·x∘y."""
    if t.mat.rows != alg.dim or t.mat.cols != alg.dim:
        raise DimMismatch("endomorphism of A expected")
    f = alg.field
    weight = f.coerce(weight)
    n = alg.dim
    basis = [alg.basis_vec(i) for i in range(n)]
    imgs = [t(basis[i]) for i in range(n)]
    grid = []
    for i in range(n):
        row = []
        for j in range(n):
            val = vadd(f, alg.product(imgs[i], basis[j]), alg.product(basis[i], imgs[j]))
            val = vadd(f, val, tuple(f.mul(weight, c) for c in alg.mul[i][j]))
            row.append(val)
        grid.append(tuple(row))
    return Algebra(f, n, tuple(grid))


def baxter_residual(alg: Algebra, t: LinMap) -> Residual:
    """T(x)∘T(y) - T(T(x)∘y + x∘T(y)) + x∘y on basis pairs."""
    reg = regular(alg, validate=False)
    return ext_o_equation_residual(
        reg, t, LinMap.identity(alg.field, alg.dim), MassParams(weight=0, kappa=-1, mu=0)
    )


def hom_residual(src: Algebra, dst: Algebra, phi: LinMap) -> Residual:
    """phi(x·y) - phi(x)∘phi(y) on basis pairs (algebra homomorphism check)."""
    f = src.field
    col = ResidualCollector(f, "algebra-hom")
    n = src.dim
    for i in range(n):
        pi = phi(src.basis_vec(i))
        for j in range(n):
            val = vsub(f, phi(src.mul[i][j]), dst.product(pi, phi(src.basis_vec(j))))
            col.record("hom", (i, j), val)
    return col.done()
