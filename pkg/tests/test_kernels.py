import random

import pytest

from novikov._kernels import BACKEND, pure

fast = pytest.importorskip("novikov._kernels._fast", reason="compiled kernels not built")

FUNCS = (
    "novikov_ok",
    "ext_o_regular_ok",
    "rb_ok",
    "hkappa_ok",
    "nybe_ok",
    "enybe_ok",
    "o_nybe_ok",
    "invariant_symmetric_ok",
    "bilform_invariant_ok",
)


def test_backend_selected():
    assert BACKEND in ("fast", "pure")


def test_differential_pure_vs_fast():
    rng = random.Random(42)
    for _ in range(1500):
        p = rng.choice((2, 3, 5, 7))
        n = rng.choice((2, 3))
        mul = tuple(rng.randrange(p) for _ in range(n**3))
        t = tuple(rng.randrange(p) for _ in range(n * n))
        b = tuple(rng.randrange(p) for _ in range(n * n))
        r = tuple(rng.randrange(p) for _ in range(n * n))
        sym = tuple(r[i * n + j] if i <= j else r[j * n + i] for i in range(n) for j in range(n))
        lam, kap, mu, eps, hk = (rng.randrange(p) for _ in range(5))
        assert fast.novikov_ok(mul, n, p) == pure.novikov_ok(mul, n, p)
        assert fast.ext_o_regular_ok(mul, n, p, t, b, lam, kap, mu) == pure.ext_o_regular_ok(
            mul, n, p, t, b, lam, kap, mu
        )
        assert fast.rb_ok(mul, n, p, t, lam) == pure.rb_ok(mul, n, p, t, lam)
        assert fast.hkappa_ok(mul, n, p, t, lam, hk) == pure.hkappa_ok(mul, n, p, t, lam, hk)
        assert fast.nybe_ok(mul, n, p, r) == pure.nybe_ok(mul, n, p, r)
        assert fast.enybe_ok(mul, n, p, r, eps) == pure.enybe_ok(mul, n, p, r, eps)
        assert fast.o_nybe_ok(mul, n, p, r) == pure.o_nybe_ok(mul, n, p, r)
        assert fast.invariant_symmetric_ok(mul, n, p, sym) == pure.invariant_symmetric_ok(mul, n, p, sym)
        assert fast.bilform_invariant_ok(mul, n, p, sym) == pure.bilform_invariant_ok(mul, n, p, sym)


def test_enumeration_identical():
    for p in (2, 3):
        assert fast.enumerate_novikov_dim2(p) == pure.enumerate_novikov_dim2(p)


def test_kernels_match_object_path():
    """The kernel predicates and the generic residual ops agree."""
    import random as _random

    from novikov.algebra import Algebra, novikov_residual, regular
    from novikov.fields import GF
    from novikov.operators import LinMap, rota_baxter_residual
    from novikov.linalg import Matrix
    from novikov.tensors import Tensor2
    from novikov.ybe import nybe_residual, o_nybe_residual

    rng = _random.Random(8)
    f5 = GF(5)
    for _ in range(150):
        mul = tuple(rng.randrange(5) for _ in range(8))
        grid = tuple(tuple(tuple(mul[(i * 2 + j) * 2 + k] for k in range(2)) for j in range(2)) for i in range(2))
        alg = Algebra(f5, 2, grid)
        assert pure.novikov_ok(mul, 2, 5) == novikov_residual(alg).is_zero
        t = tuple(rng.randrange(5) for _ in range(4))
        lam = rng.randrange(5)
        assert pure.rb_ok(mul, 2, 5, t, lam) == rota_baxter_residual(
            alg, LinMap(Matrix(f5, 2, 2, t)), lam
        ).is_zero
        r = tuple(rng.randrange(5) for _ in range(4))
        tens = Tensor2(f5, ((r[0], r[1]), (r[2], r[3])))
        assert pure.nybe_ok(mul, 2, 5, r) == nybe_residual(alg, tens).is_zero()
        assert pure.o_nybe_ok(mul, 2, 5, r) == o_nybe_residual(alg, tens).is_zero
