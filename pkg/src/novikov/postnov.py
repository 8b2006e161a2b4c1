"""Post-Novikov algebras, commutative dendriform trialgebras with a
derivation, and every construction producing post-Novikov structures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (
    Algebra,
    BimodNov,
    Grid,
    coerce_grid,
    grid_product,
    grids_equal,
    novikov_residual,
    zero_grid,
)
from .errors import (
    KernelNotIdeal,
    NotDerivation,
    NotOOperator,
    NotRotaBaxter,
    NotTrialgebra,
    NovikovError,
    SingularT,
)
from .fields import Field
from .linalg import Matrix, column_space_pivots, inverse, kernel_basis, rank, solve_right, vadd, vsub
from .operators import LinMap, hom_residual, o_operator_residual, rota_baxter_residual
from .residual import Residual, ResidualCollector


@dataclass(frozen=True)
class PostNov:
    """Three bilinear products on one space: the base product ``circ``,
    a left product ``tri_l`` (x ◁ y) and a right product ``tri_r`` (x ▷ y)."""

    field: Field
    dim: int
    circ: Grid
    tri_l: Grid
    tri_r: Grid

    def __post_init__(self):
        for name in ("circ", "tri_l", "tri_r"):
            object.__setattr__(self, name, coerce_grid(self.field, getattr(self, name), self.dim))

    @classmethod
    def zero(cls, field: Field, dim: int) -> "PostNov":
        z = zero_grid(field, dim)
        return cls(field, dim, z, z, z)

    def circ_prod(self, a: Sequence, b: Sequence) -> tuple:
        return grid_product(self.field, self.circ, a, b)

    def left_prod(self, a: Sequence, b: Sequence) -> tuple:
        """a ◁ b."""
        return grid_product(self.field, self.tri_l, a, b)

    def right_prod(self, a: Sequence, b: Sequence) -> tuple:
        """a ▷ b."""
        return grid_product(self.field, self.tri_r, a, b)

    def sum_grid(self) -> Grid:
        f = self.field
        n = self.dim
        return tuple(
            tuple(
                vadd(f, vadd(f, self.tri_r[i][j], self.tri_l[i][j]), self.circ[i][j])
                for j in range(n)
            )
            for i in range(n)
        )

    def base_algebra(self) -> Algebra:
        return Algebra(self.field, self.dim, self.circ)


def associated(p: PostNov) -> Algebra:
    """The sum product a ▷ b + a ◁ b + a ∘ b."""
    return Algebra(p.field, p.dim, p.sum_grid())


def post_residual(p: PostNov) -> Residual:
    """All eight compatibility identities plus Novikov-ness of the base product."""
    f = p.field
    n = p.dim
    col = ResidualCollector(f, "post-novikov")
    base = novikov_residual(p.base_algebra())
    ssum = p.sum_grid()
    basis = [tuple(f.one() if k == i else f.zero() for k in range(n)) for i in range(n)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                ea, eb, ec = basis[a], basis[b], basis[c]
                ab_sum = ssum[a][b]
                # (a▷c)◁b = (a▷b+a◁b+a∘b)▷c
                e1 = vsub(
                    f,
                    p.left_prod(p.tri_r[a][c], eb),
                    p.right_prod(ab_sum, ec),
                )
                col.record("nd1", (a, b, c), e1)
                # a▷(c◁b) - (a▷c)◁b + (c◁a)◁b = c◁(a▷b+a◁b+a∘b)
                e2 = p.right_prod(ea, p.tri_l[c][b])
                e2 = vsub(f, e2, p.left_prod(p.tri_r[a][c], eb))
                e2 = vadd(f, e2, p.left_prod(p.tri_l[c][a], eb))
                e2 = vsub(f, e2, p.left_prod(ec, ab_sum))
                col.record("nd2", (a, b, c), e2)
                # (a⊛b)▷c - (b⊛a)▷c = a▷(b▷c) - b▷(a▷c)
                e3 = vsub(f, p.right_prod(ab_sum, ec), p.right_prod(ssum[b][a], ec))
                e3 = vsub(f, e3, p.right_prod(ea, p.tri_r[b][c]))
                e3 = vadd(f, e3, p.right_prod(eb, p.tri_r[a][c]))
                col.record("nd3", (a, b, c), e3)
                # (a◁b)◁c = (a◁c)◁b
                e4 = vsub(f, p.left_prod(p.tri_l[a][b], ec), p.left_prod(p.tri_l[a][c], eb))
                col.record("nd4", (a, b, c), e4)
                # (a▷b)∘c - a▷(b∘c) = (b◁a)∘c - b∘(a▷c)
                e5 = vsub(f, p.circ_prod(p.tri_r[a][b], ec), p.right_prod(ea, p.circ[b][c]))
                e5 = vsub(f, e5, p.circ_prod(p.tri_l[b][a], ec))
                e5 = vadd(f, e5, p.circ_prod(eb, p.tri_r[a][c]))
                col.record("post7", (a, b, c), e5)
                # (b∘c)◁a - b∘(c◁a) = (c∘b)◁a - c∘(b◁a)
                e6 = vsub(f, p.left_prod(p.circ[b][c], ea), p.circ_prod(eb, p.tri_l[c][a]))
                e6 = vsub(f, e6, p.left_prod(p.circ[c][b], ea))
                e6 = vadd(f, e6, p.circ_prod(ec, p.tri_l[b][a]))
                col.record("post8", (a, b, c), e6)
                # (a▷b)∘c = (a▷c)∘b
                e7 = vsub(f, p.circ_prod(p.tri_r[a][b], ec), p.circ_prod(p.tri_r[a][c], eb))
                col.record("post9", (a, b, c), e7)
                # (a∘b)◁c = (a◁c)∘b
                e8 = vsub(f, p.left_prod(p.circ[a][b], ec), p.circ_prod(p.tri_l[a][c], eb))
                col.record("post10", (a, b, c), e8)
    return Residual("post-novikov", base.failures + col.done().failures)


def is_post_novikov(p: PostNov) -> bool:
    return post_residual(p).is_zero


def lr_bimodule(p: PostNov, validate: bool = True) -> BimodNov:
    """(A, ∘, L_▷, R_◁) as a bimodule Novikov algebra over the associated algebra."""
    from .errors import NotPostNovikov

    if validate and not post_residual(p).is_zero:
        raise NotPostNovikov("the triple of products is not post-Novikov")
    base = associated(p)
    n = p.dim
    f = p.field
    l_mats = tuple(Matrix.from_cols(f, [p.tri_r[i][j] for j in range(n)]) for i in range(n))
    r_mats = tuple(Matrix.from_cols(f, [p.tri_l[j][i] for j in range(n)]) for i in range(n))
    return BimodNov(base, n, l_mats, r_mats, p.circ)


@dataclass(frozen=True)
class CommTrialgebra:
    """A commutative associative product, a second product, and a derivation
    of both, packaged for the post-Novikov construction."""

    field: Field
    dim: int
    dot: Grid
    circ: Grid
    deriv: Matrix

    def __post_init__(self):
        object.__setattr__(self, "dot", coerce_grid(self.field, self.dot, self.dim))
        object.__setattr__(self, "circ", coerce_grid(self.field, self.circ, self.dim))

    def dot_prod(self, a, b) -> tuple:
        return grid_product(self.field, self.dot, a, b)

    def circ_prod(self, a, b) -> tuple:
        return grid_product(self.field, self.circ, a, b)


def trialgebra_residual(t: CommTrialgebra) -> Residual:
    """Commutativity/associativity of ·, the four compatibility identities,
    and the derivation laws for both products."""
    f = t.field
    n = t.dim
    col = ResidualCollector(f, "trialgebra")
    basis = [tuple(f.one() if k == i else f.zero() for k in range(n)) for i in range(n)]
    for a in range(n):
        for b in range(n):
            col.record("dot-commutative", (a, b), vsub(f, t.dot[a][b], t.dot[b][a]))
            for c in range(n):
                ea, eb, ec = basis[a], basis[b], basis[c]
                col.record(
                    "dot-associative",
                    (a, b, c),
                    vsub(f, t.dot_prod(t.dot[a][b], ec), t.dot_prod(ea, t.dot[b][c])),
                )
                # (a∘b)∘c = a∘(b∘c + c∘b + b·c)
                inner = vadd(f, vadd(f, t.circ[b][c], t.circ[c][b]), t.dot[b][c])
                col.record(
                    "tri-1", (a, b, c), vsub(f, t.circ_prod(t.circ[a][b], ec), t.circ_prod(ea, inner))
                )
                # (a∘b)∘c = (a∘c)∘b
                col.record(
                    "tri-2", (a, b, c), vsub(f, t.circ_prod(t.circ[a][b], ec), t.circ_prod(t.circ[a][c], eb))
                )
                # (a∘b)·c = a·(c∘b)
                col.record(
                    "tri-3", (a, b, c), vsub(f, t.dot_prod(t.circ[a][b], ec), t.dot_prod(ea, t.circ[c][b]))
                )
                # (a·b)∘c = (a∘c)·b
                col.record(
                    "tri-4", (a, b, c), vsub(f, t.circ_prod(t.dot[a][b], ec), t.dot_prod(t.circ[a][c], eb))
                )
    return col.done()


def derivation_residual(t: CommTrialgebra) -> Residual:
    f = t.field
    n = t.dim
    d = t.deriv
    col = ResidualCollector(f, "derivation")
    basis = [tuple(f.one() if k == i else f.zero() for k in range(n)) for i in range(n)]
    for a in range(n):
        da = d.col(a)
        for b in range(n):
            db = d.col(b)
            leib_dot = vsub(
                f,
                d.apply(t.dot[a][b]),
                vadd(f, t.dot_prod(da, basis[b]), t.dot_prod(basis[a], db)),
            )
            col.record("leibniz-dot", (a, b), leib_dot)
            leib_circ = vsub(
                f,
                d.apply(t.circ[a][b]),
                vadd(f, t.circ_prod(da, basis[b]), t.circ_prod(basis[a], db)),
            )
            col.record("leibniz-circ", (a, b), leib_circ)
    return col.done()


def post_from_trialgebra(t: CommTrialgebra, validate: bool = True) -> PostNov:
    """a*b = a·D(b), a◁b = a∘D(b), a▷b = D(b)∘a."""
    if validate:
        if not trialgebra_residual(t).is_zero:
            raise NotTrialgebra("products fail the trialgebra identities")
        if not derivation_residual(t).is_zero:
            raise NotDerivation("the map is not a derivation of both products")
    f = t.field
    n = t.dim
    basis = [tuple(f.one() if k == i else f.zero() for k in range(n)) for i in range(n)]
    dcols = [t.deriv.col(j) for j in range(n)]
    circ = tuple(tuple(t.dot_prod(basis[i], dcols[j]) for j in range(n)) for i in range(n))
    tri_l = tuple(tuple(t.circ_prod(basis[i], dcols[j]) for j in range(n)) for i in range(n))
    tri_r = tuple(tuple(t.circ_prod(dcols[j], basis[i]) for j in range(n)) for i in range(n))
    return PostNov(f, n, circ, tri_l, tri_r)


def post_from_o(ctx: BimodNov, alpha: LinMap, weight, validate: bool = True) -> PostNov:
    """Post-Novikov structure on the module of a weight-lambda operator:
    base product = weight·(module product), x▷y = l(alpha(x))y, x◁y = r(alpha(y))x."""
    f = ctx.field
    weight = f.coerce(weight)
    if validate and not o_operator_residual(ctx, alpha, weight).is_zero:
        raise NotOOperator("alpha is not an operator of this weight")
    m = ctx.mdim
    mb = [ctx.module_basis(i) for i in range(m)]
    imgs = [alpha(mb[i]) for i in range(m)]
    circ = tuple(
        tuple(tuple(f.mul(weight, c) for c in ctx.mul[u][v]) for v in range(m)) for u in range(m)
    )
    tri_r = tuple(tuple(ctx.l_of(imgs[u]).col(v) for v in range(m)) for u in range(m))
    tri_l = tuple(tuple(ctx.r_of(imgs[v]).col(u) for v in range(m)) for u in range(m))
    p = PostNov(f, m, circ, tri_l, tri_r)
    if validate:
        hom = hom_residual(associated(p), ctx.alg, alpha)
        if not hom.is_zero:
            raise NovikovError("operator held but the homomorphism identity failed")
    return p


@dataclass(frozen=True)
class ImagePost:
    """Push-forward post-Novikov structure on the image of an operator."""

    post: PostNov
    pivot_cols: tuple
    image_basis: tuple  # coordinates in A of the chosen column basis


def post_on_image(ctx: BimodNov, alpha: LinMap, weight, alt_preimage_check: bool = True) -> ImagePost:
    """Induced structure on alpha(M), in the leftmost-pivot column basis.

    Requires alpha to be a weight-lambda operator whose kernel is an ideal of
    the module product; well-definedness is re-verified by recomputing every
    product with kernel-shifted preimages.
    """
    f = ctx.field
    weight = f.coerce(weight)
    if not o_operator_residual(ctx, alpha, weight).is_zero:
        raise NotOOperator("alpha is not an operator of this weight")
    ker = kernel_basis(alpha.mat)
    if ker:
        kmat = Matrix.from_cols(f, [k.coords for k in ker])
        base_rank = rank(kmat)
        mb = [ctx.module_basis(i) for i in range(ctx.mdim)]
        for k in ker:
            for i in range(ctx.mdim):
                for prod in (
                    ctx.module_product(k.coords, mb[i]),
                    ctx.module_product(mb[i], k.coords),
                ):
                    ext = Matrix.from_cols(f, [kmat.col(j) for j in range(kmat.cols)] + [prod])
                    if rank(ext) != base_rank:
                        raise KernelNotIdeal("kernel is not closed under the module product")

    pivots = tuple(column_space_pivots(alpha.mat))
    d = len(pivots)
    image_cols = [alpha.mat.col(j) for j in pivots]
    if d == 0:
        return ImagePost(PostNov.zero(f, 0), pivots, ())
    img_mat = Matrix.from_cols(f, image_cols)

    def in_image_coords(vec) -> tuple:
        sol = solve_right(img_mat, vec)
        if sol is None:
            raise NovikovError("product left the image; operator identity violated")
        return sol

    def build(preimages) -> tuple[Grid, Grid, Grid]:
        a_imgs = [alpha(u) for u in preimages]
        circ_rows, l_rows, r_rows = [], [], []
        for s in range(d):
            crow, lrow, rrow = [], [], []
            for t in range(d):
                uv = ctx.module_product(preimages[s], preimages[t])
                crow.append(in_image_coords(tuple(f.mul(weight, c) for c in alpha(uv))))
                lrow.append(in_image_coords(alpha(ctx.r_of(a_imgs[t]).apply(preimages[s]))))
                rrow.append(in_image_coords(alpha(ctx.l_of(a_imgs[s]).apply(preimages[t]))))
            circ_rows.append(tuple(crow))
            l_rows.append(tuple(lrow))
            r_rows.append(tuple(rrow))
        return tuple(circ_rows), tuple(l_rows), tuple(r_rows)

    primary = [ctx.module_basis(j) for j in pivots]
    circ, tri_l, tri_r = build(primary)
    if alt_preimage_check and ker:
        shift = ker[0].coords
        shifted = [vadd(f, u, shift) for u in primary]
        circ2, tri_l2, tri_r2 = build(shifted)
        if not (
            grids_equal(f, circ, circ2)
            and grids_equal(f, tri_l, tri_l2)
            and grids_equal(f, tri_r, tri_r2)
        ):
            raise KernelNotIdeal("products depend on the preimage choice")
    return ImagePost(PostNov(f, d, circ, tri_l, tri_r), pivots, tuple(tuple(c) for c in image_cols))


def post_from_rb(alg: Algebra, t: LinMap, weight, validate: bool = True) -> PostNov:
    """x ⊙ y = weight·x∘y, x▷y = T(x)∘y, x◁y = x∘T(y) for a Rota-Baxter T."""
    f = alg.field
    weight = f.coerce(weight)
    if validate and not rota_baxter_residual(alg, t, weight).is_zero:
        raise NotRotaBaxter("T fails the Rota-Baxter identity at this weight")
    n = alg.dim
    basis = [alg.basis_vec(i) for i in range(n)]
    imgs = [t(basis[i]) for i in range(n)]
    circ = tuple(tuple(tuple(f.mul(weight, c) for c in alg.mul[i][j]) for j in range(n)) for i in range(n))
    tri_r = tuple(tuple(alg.product(imgs[i], basis[j]) for j in range(n)) for i in range(n))
    tri_l = tuple(tuple(alg.product(basis[i], imgs[j]) for j in range(n)) for i in range(n))
    return PostNov(f, n, circ, tri_l, tri_r)


def compatible_from_rb(alg: Algebra, t: LinMap, weight) -> PostNov:
    """Invertible variant: the push-forward structure whose associated
    algebra is the original product.  Raises SingularT when T is singular."""
    f = alg.field
    weight = f.coerce(weight)
    if not rota_baxter_residual(alg, t, weight).is_zero:
        raise NotRotaBaxter("T fails the Rota-Baxter identity at this weight")
    tinv = inverse(t.mat)  # SingularT if not invertible
    n = alg.dim
    basis = [alg.basis_vec(i) for i in range(n)]
    pre = [tinv.col(i) for i in range(n)]
    circ = tuple(
        tuple(tuple(f.mul(weight, c) for c in t(alg.product(pre[i], pre[j]))) for j in range(n))
        for i in range(n)
    )
    tri_r = tuple(tuple(t(alg.product(basis[i], pre[j])) for j in range(n)) for i in range(n))
    tri_l = tuple(tuple(t(alg.product(pre[i], basis[j])) for j in range(n)) for i in range(n))
    p = PostNov(f, n, circ, tri_l, tri_r)
    if not grids_equal(f, associated(p).mul, alg.mul):
        raise NovikovError("push-forward failed to recover the original product")
    return p


def post_from_nybe(alg: Algebra, r, validate: bool = True):
    """Post-Novikov structure on the dual space from a Yang-Baxter solution
    with invariant symmetric part; when the tensor map is invertible the
    compatible structure on A is returned as well.

    Returns (PostNov on A*, PostNov on A or None).
    """
    from .errors import NotNYBESolution, SymPartNotInvariant
    from .ybe import RTensor, dual_pm_products, invariance_residual, nybe_residual

    f = alg.field
    rt = RTensor.build(alg, r)
    if validate:
        if not nybe_residual(alg, r).is_zero():
            raise NotNYBESolution("tensor does not solve the Yang-Baxter equation")
        if not invariance_residual(alg, rt.r_plus).is_zero:
            raise SymPartNotInvariant("symmetric part is not invariant")
    plus_grid, _ = dual_pm_products(alg, rt)
    from .algebra import dual_context

    ctx_plus = dual_context(alg, validate=False).with_product(plus_grid)
    alpha = LinMap(rt.hat)
    dual_post = post_from_o(ctx_plus, alpha, 1, validate=validate)
    compat = None
    try:
        hat_inv = inverse(rt.hat)
    except SingularT:
        hat_inv = None
    if hat_inv is not None:
        n = alg.dim
        basis = [alg.basis_vec(i) for i in range(n)]
        pre = [hat_inv.col(i) for i in range(n)]
        ctxp = ctx_plus
        circ = tuple(
            tuple(rt.hat.apply(ctxp.module_product(pre[i], pre[j])) for j in range(n))
            for i in range(n)
        )
        tri_r = tuple(
            tuple(rt.hat.apply(ctxp.l_of(basis[i]).apply(pre[j])) for j in range(n))
            for i in range(n)
        )
        tri_l = tuple(
            tuple(rt.hat.apply(ctxp.r_of(basis[j]).apply(pre[i])) for j in range(n))
            for i in range(n)
        )
        compat = PostNov(f, n, circ, tri_l, tri_r)
    return dual_post, compat
