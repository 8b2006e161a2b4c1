"""Brute-force enumeration over small prime fields and seeded random
instance generation: the independent oracle behind the property sweeps."""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Sequence

from . import _kernels as kernels
from .algebra import Algebra, BimodNov, novikov_residual, regular
from .errors import NovikovError, SpaceTooLarge
from .fields import Field, GF, PrimeField, QQ
from .linalg import Matrix
from .operators import LinMap, MassParams, ext_o_equation_residual, rota_baxter_residual
from .tensors import Tensor2
from .ybe import enybe_residual, invariance_residual, nybe_residual, bilform_invariance, BilForm

SEARCH_KINDS = (
    "novikov-algebra",
    "nybe-solution",
    "enybe-solution",
    "ext-o-operator",
    "rota-baxter",
    "invariant-symmetric-tensor",
    "quadratic-form",
)

ALLOWED_PRIMES = (2, 3, 5, 7)
CANDIDATE_BOUND = 2**32


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: a target kind, the field and dimensions, and the
    fixed context (algebra table, maps, masses) the kind needs."""

    kind: str
    field: Field
    dim: int
    algebra: Optional[Algebra] = None
    weight: object = 0
    kappa: object = 0
    mu: object = 0
    epsilon: object = 0
    beta: Optional[LinMap] = None
    shard_index: int = 0
    shard_count: int = 1

    def __post_init__(self):
        if self.kind not in SEARCH_KINDS:
            raise NovikovError(f"unknown search kind {self.kind!r}")
        if not isinstance(self.field, PrimeField) or self.field.p not in ALLOWED_PRIMES:
            raise NovikovError("searches run over F_p with p in {2, 3, 5, 7}")
        if not (0 <= self.shard_index < self.shard_count):
            raise NovikovError("bad shard layout")

    @property
    def p(self) -> int:
        return self.field.p

    def coeff_count(self) -> int:
        n = self.dim
        if self.kind == "novikov-algebra":
            return n * n * n
        if self.kind in ("nybe-solution", "enybe-solution", "rota-baxter", "ext-o-operator"):
            return n * n
        if self.kind in ("invariant-symmetric-tensor", "quadratic-form"):
            return n * (n + 1) // 2
        raise NovikovError(self.kind)

    def candidate_total(self) -> int:
        return self.p ** self.coeff_count()

    def context_hash(self) -> str:
        payload = {
            "kind": self.kind,
            "p": self.p,
            "dim": self.dim,
            "algebra": _alg_flat(self.algebra) if self.algebra is not None else None,
            "weight": str(self.weight),
            "kappa": str(self.kappa),
            "mu": str(self.mu),
            "epsilon": str(self.epsilon),
            "beta": list(self.beta.mat.entries) if self.beta is not None else None,
        }
        blob = json.dumps(payload, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class SearchResult:
    spec: SearchSpec
    solutions: list
    candidate_count: int
    elapsed_ms: int
    check_hash: str

    def to_jsonl(self) -> str:
        lines = []
        ctx = self.spec.context_hash()
        for sol in self.solutions:
            lines.append(
                json.dumps(
                    {"kind": self.spec.kind, "coeffs": list(sol), "context": ctx},
                    sort_keys=True,
                )
            )
        return "\n".join(lines) + ("\n" if lines else "")


def _alg_flat(alg: Algebra) -> list:
    n = alg.dim
    return [int(alg.mul[i][j][k]) for i in range(n) for j in range(n) for k in range(n)]


def _digits(idx: int, count: int, p: int) -> tuple:
    out = [0] * count
    for m in range(count - 1, -1, -1):
        out[m] = idx % p
        idx //= p
    return tuple(out)


def _candidates(spec: SearchSpec) -> Iterator[tuple[int, tuple]]:
    total = spec.candidate_total()
    count = spec.coeff_count()
    p = spec.p
    for idx in range(total):
        if idx % spec.shard_count != spec.shard_index:
            continue
        yield idx, _digits(idx, count, p)


def _sym_unpack(coeffs: tuple, n: int) -> tuple:
    """Upper-triangle coefficients to a flat symmetric n*n grid."""
    grid = [0] * (n * n)
    t = 0
    for i in range(n):
        for j in range(i, n):
            grid[i * n + j] = coeffs[t]
            grid[j * n + i] = coeffs[t]
            t += 1
    return tuple(grid)


def _accepts(spec: SearchSpec):
    """Returns the kernel-backed predicate for one flat candidate."""
    p = spec.p
    n = spec.dim
    if spec.kind == "novikov-algebra":
        return lambda c: kernels.novikov_ok(c, n, p)
    mul = tuple(_alg_flat(_require_algebra(spec)))
    if spec.kind == "nybe-solution":
        return lambda c: kernels.nybe_ok(mul, n, p, c)
    if spec.kind == "enybe-solution":
        eps = spec.field.coerce(spec.epsilon)
        return lambda c: kernels.enybe_ok(mul, n, p, c, eps)
    if spec.kind == "rota-baxter":
        lam = spec.field.coerce(spec.weight)
        return lambda c: kernels.rb_ok(mul, n, p, c, lam)
    if spec.kind == "ext-o-operator":
        lam = spec.field.coerce(spec.weight)
        kap = spec.field.coerce(spec.kappa)
        m = spec.field.coerce(spec.mu)
        beta_flat = tuple(int(x) for x in spec.beta.mat.entries) if spec.beta is not None else None
        return lambda c: kernels.ext_o_regular_ok(mul, n, p, c, beta_flat, lam, kap, m)
    if spec.kind == "invariant-symmetric-tensor":
        return lambda c: kernels.invariant_symmetric_ok(mul, n, p, _sym_unpack(c, n))
    if spec.kind == "quadratic-form":
        def accept(c):
            grid = _sym_unpack(c, n)
            if not kernels.bilform_invariant_ok(mul, n, p, grid):
                return False
            form = BilForm(spec.field, tuple(tuple(grid[i * n + j] for j in range(n)) for i in range(n)))
            return form.is_nondegenerate()

        return accept
    raise NovikovError(spec.kind)


def _require_algebra(spec: SearchSpec) -> Algebra:
    if spec.algebra is None:
        raise NovikovError(f"search kind {spec.kind!r} needs a context algebra")
    if spec.algebra.dim != spec.dim or spec.algebra.field != spec.field:
        raise NovikovError("context algebra does not match the search spec")
    return spec.algebra


def enumerate_search(spec: SearchSpec) -> SearchResult:
    """Exhaustive lexicographic scan of the coefficient space."""
    total = spec.candidate_total()
    if total > CANDIDATE_BOUND:
        raise SpaceTooLarge(f"{total} candidates exceed the {CANDIDATE_BOUND} bound")
    t0 = time.perf_counter()
    solutions = []
    if spec.kind == "novikov-algebra" and spec.dim == 2 and spec.shard_count == 1:
        solutions = [tuple(s) for s in kernels.enumerate_novikov_dim2(spec.p)]
        count = total
    else:
        accept = _accepts(spec)
        count = 0
        for _idx, cand in _candidates(spec):
            count += 1
            if accept(cand):
                solutions.append(cand)
    elapsed = int((time.perf_counter() - t0) * 1000)
    blob = json.dumps([list(s) for s in solutions]).encode()
    h = hashlib.sha256(blob).hexdigest()
    return SearchResult(spec, solutions, count, elapsed, h)


def solution_to_object(spec: SearchSpec, coeffs: Sequence):
    """Interpret a flat solution vector back into a domain object."""
    f = spec.field
    n = spec.dim
    if spec.kind == "novikov-algebra":
        grid = tuple(
            tuple(tuple(coeffs[(i * n + j) * n + k] for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return Algebra(f, n, grid)
    if spec.kind in ("nybe-solution", "enybe-solution"):
        return Tensor2(f, tuple(tuple(coeffs[i * n + j] for j in range(n)) for i in range(n)))
    if spec.kind in ("rota-baxter", "ext-o-operator"):
        return LinMap(Matrix(f, n, n, tuple(coeffs)))
    if spec.kind in ("invariant-symmetric-tensor", "quadratic-form"):
        flat = _sym_unpack(tuple(coeffs), n)
        grid = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n))
        if spec.kind == "quadratic-form":
            return BilForm(f, grid)
        return Tensor2(f, grid)
    raise NovikovError(spec.kind)


def reverify(spec: SearchSpec, coeffs: Sequence) -> bool:
    """Re-check one solution through the generic object-path residual ops
    (the independent route; never the kernels)."""
    obj = solution_to_object(spec, coeffs)
    if spec.kind == "novikov-algebra":
        return novikov_residual(obj).is_zero
    alg = _require_algebra(spec)
    if spec.kind == "nybe-solution":
        return nybe_residual(alg, obj).is_zero()
    if spec.kind == "enybe-solution":
        return enybe_residual(alg, obj, spec.epsilon).is_zero()
    if spec.kind == "rota-baxter":
        return rota_baxter_residual(alg, obj, spec.weight).is_zero
    if spec.kind == "ext-o-operator":
        ctx = regular(alg, validate=False)
        params = MassParams(spec.weight, spec.kappa, spec.mu)
        return ext_o_equation_residual(ctx, obj, spec.beta, params).is_zero
    if spec.kind == "invariant-symmetric-tensor":
        return invariance_residual(alg, obj, cross_check=False).is_zero
    if spec.kind == "quadratic-form":
        rep, quad = bilform_invariance(alg, obj)
        return rep.is_zero and quad
    raise NovikovError(spec.kind)


# ---------------------------------------------------------------------------
# instance families


def trunc_poly_algebra(field: Field, n: int) -> Algebra:
    """Truncated polynomial Novikov algebra on basis 1, x, ..., x^{n-1} with
    the degree-preserving derivation: x^i ∘ x^j = j * x^{i+j} (truncated)."""
    table = {}
    for i in range(n):
        for j in range(1, n):
            if i + j < n:
                v = [0] * n
                v[i + j] = j
                table[(i, j)] = tuple(v)
    return Algebra.from_table(field, table, n)


_ENUM_CACHE: dict[int, list] = {}


def enumerated_dim2(field: PrimeField) -> list[Algebra]:
    """All dim-2 Novikov algebras over F_p, lexicographic, cached."""
    if field.p not in _ENUM_CACHE:
        spec = SearchSpec("novikov-algebra", field, 2)
        res = enumerate_search(spec)
        _ENUM_CACHE[field.p] = [solution_to_object(spec, s) for s in res.solutions]
    return _ENUM_CACHE[field.p]


def random_matrix(field: Field, rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix(field, rows, cols, tuple(field.sample(rng) for _ in range(rows * cols)))


def random_instance(seed: int, family: str, field: Field = QQ, n: int = 2, shape=None):
    """Reproducible instance generation.

    Families: ``trunc-poly-novikov`` (always a Novikov algebra),
    ``enumerated-dim2`` (indexes into the exhaustive list by seed),
    ``random-maps-over-Fp`` (a seeded matrix of the requested shape).
    """
    rng = random.Random(seed)
    if family == "trunc-poly-novikov":
        return trunc_poly_algebra(field, n)
    if family == "enumerated-dim2":
        algs = enumerated_dim2(field)
        return algs[seed % len(algs)]
    if family == "random-maps-over-Fp":
        rows, cols = shape if shape is not None else (n, n)
        return random_matrix(field, rows, cols, rng)
    raise NovikovError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# linear subspaces of maps and tensors (constraint solving, not enumeration)


def _map_space_basis(ctx: BimodNov, row_builders) -> list[LinMap]:
    """Basis of the space of maps M -> A cut out by linear conditions.

    ``row_builders`` yields constraint rows as functions of the flat map
    coefficients c[i*mdim + u] = coefficient of e_i in beta(e_u).
    """
    f = ctx.field
    n = ctx.alg.dim
    m = ctx.mdim
    unknowns = n * m
    rows = []
    for build in row_builders:
        rows.extend(build(n, m))
    if not rows:
        mat = Matrix.zeros(f, 1, unknowns)
    else:
        mat = Matrix.from_rows(f, rows)
    from .linalg import kernel_basis

    basis = []
    for vec in kernel_basis(mat):
        entries = vec.coords
        basis.append(LinMap(Matrix(f, n, m, entries)))
    return basis


def balanced_hom_basis(ctx: BimodNov) -> list[LinMap]:
    """Basis of balanced module homomorphisms M -> A (linear conditions)."""
    f = ctx.field

    def balanced_rows(nn, mm):
        rows = []
        for u in range(mm):
            for v in range(mm):
                for k in range(mm):
                    row = [f.zero()] * (nn * mm)
                    for i in range(nn):
                        lcol = ctx.l_mats[i].col(v)
                        rcol = ctx.r_mats[i].col(u)
                        row[i * mm + u] = f.add(row[i * mm + u], lcol[k])
                        row[i * mm + v] = f.sub(row[i * mm + v], rcol[k])
                    rows.append(row)
        return rows

    return _map_space_basis(ctx, [balanced_rows, _hom_row_builder(ctx)])


def _hom_row_builder(ctx: BimodNov):
    f = ctx.field

    def hom_rows(nn, mm):
        rows = []
        for x in range(nn):
            lx = ctx.l_mats[x]
            rx = ctx.r_mats[x]
            for u in range(mm):
                lxu = lx.col(u)
                rxu = rx.col(u)
                for k in range(nn):
                    # x∘beta(e_u) - beta(l(x)e_u) = 0, coordinate k
                    row = [f.zero()] * (nn * mm)
                    for i in range(nn):
                        row[i * mm + u] = f.add(row[i * mm + u], ctx.alg.mul[x][i][k])
                    for w in range(mm):
                        if not f.is_zero(lxu[w]):
                            row[k * mm + w] = f.sub(row[k * mm + w], lxu[w])
                    rows.append(row)
                    # beta(e_u)∘x - beta(r(x)e_u) = 0, coordinate k
                    row2 = [f.zero()] * (nn * mm)
                    for i in range(nn):
                        row2[i * mm + u] = f.add(row2[i * mm + u], ctx.alg.mul[i][x][k])
                    for w in range(mm):
                        if not f.is_zero(rxu[w]):
                            row2[k * mm + w] = f.sub(row2[k * mm + w], rxu[w])
                    rows.append(row2)
        return rows

    return hom_rows


def hom_map_basis(ctx: BimodNov) -> list[LinMap]:
    """Basis of module homomorphisms M -> A (no balance condition)."""
    return _map_space_basis(ctx, [_hom_row_builder(ctx)])


def _equivalent_row_builder(ctx: BimodNov):
    f = ctx.field

    def rows_fn(nn, mm):
        mb = [ctx.module_basis(i) for i in range(mm)]
        rows = []
        for u in range(mm):
            for v in range(mm):
                uv = ctx.mul[u][v]
                for w in range(mm):
                    # l(beta(u·v))w - (l(beta(u))v)·w = 0; unknowns b[i, q]
                    for k in range(mm):
                        row = [f.zero()] * (nn * mm)
                        for i in range(nn):
                            licol_w = ctx.l_mats[i].col(w)
                            for q in range(mm):
                                if not f.is_zero(uv[q]):
                                    row[i * mm + q] = f.add(
                                        row[i * mm + q], f.mul(uv[q], licol_w[k])
                                    )
                            liv = ctx.l_mats[i].col(v)
                            prod = ctx.module_product(liv, mb[w])
                            row[i * mm + u] = f.sub(row[i * mm + u], prod[k])
                        rows.append(row)
                    # r(beta(v·w))u - u·(r(beta(w))v) = 0
                    vw = ctx.mul[v][w]
                    for k in range(mm):
                        row = [f.zero()] * (nn * mm)
                        for i in range(nn):
                            ricol_u = ctx.r_mats[i].col(u)
                            for q in range(mm):
                                if not f.is_zero(vw[q]):
                                    row[i * mm + q] = f.add(
                                        row[i * mm + q], f.mul(vw[q], ricol_u[k])
                                    )
                            riv = ctx.r_mats[i].col(v)
                            prod = ctx.module_product(mb[u], riv)
                            row[i * mm + w] = f.sub(row[i * mm + w], prod[k])
                        rows.append(row)
        return rows

    return rows_fn


def balanced_hom_equivalent_basis(ctx: BimodNov) -> list[LinMap]:
    """Basis of maps that are balanced homomorphisms and satisfy the
    (unscaled) equivalence identities."""
    f = ctx.field

    def balanced_rows(nn, mm):
        rows = []
        for u in range(mm):
            for v in range(mm):
                for k in range(mm):
                    row = [f.zero()] * (nn * mm)
                    for i in range(nn):
                        lcol = ctx.l_mats[i].col(v)
                        rcol = ctx.r_mats[i].col(u)
                        row[i * mm + u] = f.add(row[i * mm + u], lcol[k])
                        row[i * mm + v] = f.sub(row[i * mm + v], rcol[k])
                    rows.append(row)
        return rows

    return _map_space_basis(ctx, [balanced_rows, _hom_row_builder(ctx), _equivalent_row_builder(ctx)])


def invariant_symmetric_basis(alg: Algebra) -> list[Tensor2]:
    """Basis of invariant symmetric 2-tensors (a linear condition)."""
    f = alg.field
    n = alg.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    unknowns = len(pairs)
    rows = []
    for x in range(n):
        for i in range(n):
            for j in range(n):
                row = [f.zero()] * unknowns
                for t, (a, b) in enumerate(pairs):
                    coeff = f.zero()
                    for (aa, bb) in ((a, b), (b, a)) if a != b else ((a, b),):
                        # s_{aa,bb} contributes via (L(x)⊗id + id⊗Lstar(x))
                        if bb == j:
                            coeff = f.add(coeff, alg.mul[x][aa][i])
                        if aa == i:
                            star = f.add(alg.mul[x][bb][j], alg.mul[bb][x][j])
                            coeff = f.add(coeff, star)
                    row[t] = coeff
                rows.append(row)
    mat = Matrix.from_rows(f, rows) if rows else Matrix.zeros(f, 1, unknowns)
    from .linalg import kernel_basis

    out = []
    for vec in kernel_basis(mat):
        grid = [[f.zero()] * n for _ in range(n)]
        for t, (a, b) in enumerate(pairs):
            grid[a][b] = vec.coords[t]
            grid[b][a] = vec.coords[t]
        out.append(Tensor2(f, tuple(tuple(r) for r in grid)))
    return out


def invariant_form_basis(alg: Algebra) -> list[BilForm]:
    """Basis of invariant symmetric bilinear forms (linear condition)."""
    f = alg.field
    n = alg.dim
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    unknowns = len(pairs)
    rows = []
    for i in range(n):
        for j in range(n):
            ij = alg.mul[i][j]
            for k in range(n):
                star_ik = alg.basis_star(i, k)
                row = [f.zero()] * unknowns
                for t, (a, b) in enumerate(pairs):
                    coeff = f.zero()
                    for (aa, bb) in ((a, b), (b, a)) if a != b else ((a, b),):
                        # B(e_i∘e_j, e_k): picks B[aa][bb] when bb == k
                        if bb == k:
                            coeff = f.add(coeff, ij[aa])
                        # B(e_j, e_i⋆e_k): picks B[aa][bb] when aa == j
                        if aa == j:
                            coeff = f.add(coeff, star_ik[bb])
                    row[t] = coeff
                rows.append(row)
    mat = Matrix.from_rows(f, rows) if rows else Matrix.zeros(f, 1, unknowns)
    from .linalg import kernel_basis

    out = []
    for vec in kernel_basis(mat):
        grid = [[f.zero()] * n for _ in range(n)]
        for t, (a, b) in enumerate(pairs):
            grid[a][b] = vec.coords[t]
            grid[b][a] = vec.coords[t]
        out.append(BilForm(f, tuple(tuple(r) for r in grid)))
    return out


def sample_from_basis(basis: list, rng: random.Random, field: Field):
    """Seeded random combination of basis elements (None for empty bases)."""
    if not basis:
        return None
    acc = None
    for b in basis:
        c = field.sample(rng)
        term = b.scale(c)
        acc = term if acc is None else acc + term
    return acc


def golden_counts() -> dict:
    """Pinned enumeration counts; NOVA_GOLDEN_DIR overrides the location."""
    import os

    base = os.environ.get("NOVA_GOLDEN_DIR")
    if base is None:
        base = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "goldens")
        if not os.path.isdir(base):
            base = os.path.join(os.getcwd(), "goldens")
    path = os.path.join(base, "counts.json")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
