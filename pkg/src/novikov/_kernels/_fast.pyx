# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p kernels; mirrors ``pure`` function-for-function.

Layouts are identical to the pure backend: flat tables mul[(i*n+j)*n+k],
row-major matrices t[i*n+j], flat 2-tensors r[i*n+j].
"""

BACKEND_NAME = "fast"

DEF MAXN = 8           # dimensions stay tiny; MAXN**3 = 512 scalars
DEF MAXC = 512


cdef inline long long _mod(long long v, long long p) nogil:
    v %= p
    if v < 0:
        v += p
    return v


cdef int _load(seq, long long* buf, int expect) except -1:
    cdef int i
    if len(seq) != expect:
        raise ValueError("kernel argument has the wrong length")
    for i in range(expect):
        buf[i] = seq[i]
    return 0


cdef bint _novikov_ok(long long* mul, int n, long long p) nogil:
    cdef int i, j, k, t, s
    cdef long long a1, a2, a3, a4, a5
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for t in range(n):
                    a1 = 0; a2 = 0; a3 = 0; a4 = 0; a5 = 0
                    for s in range(n):
                        a1 += _mod(mul[(i*n+j)*n+s] * mul[(s*n+k)*n+t], p)
                        a2 += _mod(mul[(j*n+k)*n+s] * mul[(i*n+s)*n+t], p)
                        a3 += _mod(mul[(j*n+i)*n+s] * mul[(s*n+k)*n+t], p)
                        a4 += _mod(mul[(i*n+k)*n+s] * mul[(j*n+s)*n+t], p)
                        a5 += _mod(mul[(i*n+k)*n+s] * mul[(s*n+j)*n+t], p)
                    if _mod(a1 - a2 - a3 + a4, p) != 0:
                        return False
                    if _mod(a1 - a5, p) != 0:
                        return False
    return True


def novikov_ok(mul, int n, long long p):
    cdef long long buf[MAXC]
    _load(mul, buf, n * n * n)
    return bool(_novikov_ok(buf, n, p))


def enumerate_novikov_dim2(long long p):
    """All dim-2 tables over F_p passing the Novikov identities, flat
    8-tuples in lexicographic coefficient order."""
    cdef long long table[8]
    cdef long long total = 1
    cdef int m
    for m in range(8):
        total *= p
    cdef long long idx, v
    out = []
    for idx in range(total):
        v = idx
        for m in range(7, -1, -1):
            table[m] = v % p
            v //= p
        if _novikov_ok(table, 2, p):
            out.append((table[0], table[1], table[2], table[3],
                        table[4], table[5], table[6], table[7]))
    return out


def product(mul, int n, long long p, a, b):
    cdef long long mbuf[MAXC]
    cdef long long av[MAXN]
    cdef long long bv[MAXN]
    cdef long long out[MAXN]
    cdef int i, j, k
    _load(mul, mbuf, n * n * n)
    _load(a, av, n)
    _load(b, bv, n)
    for k in range(n):
        out[k] = 0
    for i in range(n):
        if av[i] == 0:
            continue
        for j in range(n):
            if bv[j] == 0:
                continue
            for k in range(n):
                out[k] += _mod(av[i] * bv[j] % p * mbuf[(i*n+j)*n+k], p)
    return [int(_mod(out[k], p)) for k in range(n)]


cdef bint _ext_o_regular_ok(long long* mul, int n, long long p, long long* t,
                            long long* beta, bint has_beta,
                            long long lam, long long kappa, long long mu) nogil:
    cdef int x, y, i, k, s
    cdef long long lhs[MAXN]
    cdef long long inner[MAXN]
    cdef long long bb[MAXN]
    cdef long long ci
    for x in range(n):
        for y in range(n):
            for k in range(n):
                lhs[k] = 0
                inner[k] = lam * mul[(x*n+y)*n+k] % p
            # lhs = T(ex)∘T(ey); inner += T(ex)∘ey + ex∘T(ey)
            for i in range(n):
                ci = t[i*n+x]      # (T e_x)_i
                if ci:
                    for s in range(n):
                        if t[s*n+y]:
                            for k in range(n):
                                lhs[k] += _mod(ci * t[s*n+y] % p * mul[(i*n+s)*n+k], p)
                    for k in range(n):
                        inner[k] += _mod(ci * mul[(i*n+y)*n+k], p)
                ci = t[i*n+y]      # (T e_y)_i
                if ci:
                    for k in range(n):
                        inner[k] += _mod(ci * mul[(x*n+i)*n+k], p)
            # lhs -= T(inner)
            for i in range(n):
                ci = _mod(inner[i], p)
                if ci:
                    for k in range(n):
                        lhs[k] -= _mod(ci * t[k*n+i], p)
            if has_beta:
                for k in range(n):
                    bb[k] = 0
                for i in range(n):
                    ci = beta[i*n+x]
                    if ci:
                        for s in range(n):
                            if beta[s*n+y]:
                                for k in range(n):
                                    bb[k] += _mod(ci * beta[s*n+y] % p * mul[(i*n+s)*n+k], p)
                for k in range(n):
                    lhs[k] -= kappa * _mod(bb[k], p) % p
                if mu != 0:
                    for i in range(n):
                        ci = mul[(x*n+y)*n+i]
                        if ci:
                            for k in range(n):
                                lhs[k] -= mu * ci % p * beta[k*n+i] % p
            for k in range(n):
                if _mod(lhs[k], p) != 0:
                    return False
    return True


def ext_o_regular_ok(mul, int n, long long p, t, beta, long long lam,
                     long long kappa, long long mu):
    cdef long long mbuf[MAXC]
    cdef long long tbuf[MAXC]
    cdef long long bbuf[MAXC]
    cdef bint has_beta = beta is not None
    _load(mul, mbuf, n * n * n)
    _load(t, tbuf, n * n)
    if has_beta:
        _load(beta, bbuf, n * n)
    return bool(_ext_o_regular_ok(mbuf, n, p, tbuf, bbuf, has_beta,
                                  _mod(lam, p), _mod(kappa, p), _mod(mu, p)))


def rb_ok(mul, int n, long long p, t, long long lam):
    return ext_o_regular_ok(mul, n, p, t, None, lam, 0, 0)


def hkappa_ok(mul, int n, long long p, t, long long lam, long long hk):
    ident = [0] * (n * n)
    cdef int i
    for i in range(n):
        ident[i * n + i] = 1
    return ext_o_regular_ok(mul, n, p, t, ident, lam, hk, 0)


cdef bint _nybe_acc(long long* mul, int n, long long p, long long* r,
                    long long eps, long long* acc) nogil:
    """Fills acc with the three-contraction sum minus the eps term."""
    cdef int a, b, c, d, k, i, j
    cdef long long rab, rcd, co, m, sm
    for k in range(n * n * n):
        acc[k] = 0
    for a in range(n):
        for b in range(n):
            rab = r[a*n+b]
            if rab == 0:
                continue
            for c in range(n):
                for d in range(n):
                    rcd = r[c*n+d]
                    if rcd == 0:
                        continue
                    co = rab * rcd % p
                    for k in range(n):
                        m = mul[(b*n+d)*n+k]
                        if m:
                            acc[(a*n+c)*n+k] += co * m % p
                        sm = mul[(b*n+c)*n+k] + mul[(c*n+b)*n+k]
                        if sm:
                            acc[(a*n+k)*n+d] += co * sm % p
                        m = mul[(a*n+c)*n+k]
                        if m:
                            acc[(k*n+d)*n+b] += co * m % p
    if eps != 0:
        for a in range(n):
            for b in range(n):
                rab = _mod(r[a*n+b] + r[b*n+a], p)
                if rab == 0:
                    continue
                for c in range(n):
                    for d in range(n):
                        rcd = _mod(r[c*n+d] + r[d*n+c], p)
                        if rcd == 0:
                            continue
                        co = eps * rab % p * rcd % p
                        for k in range(n):
                            m = mul[(b*n+d)*n+k]
                            if m:
                                acc[(a*n+c)*n+k] -= co * m % p
    for k in range(n * n * n):
        if _mod(acc[k], p) != 0:
            return False
    return True


def nybe_ok(mul, int n, long long p, r):
    cdef long long mbuf[MAXC]
    cdef long long rbuf[MAXC]
    cdef long long acc[MAXC]
    _load(mul, mbuf, n * n * n)
    _load(r, rbuf, n * n)
    return bool(_nybe_acc(mbuf, n, p, rbuf, 0, acc))


def enybe_ok(mul, int n, long long p, r, long long eps):
    cdef long long mbuf[MAXC]
    cdef long long rbuf[MAXC]
    cdef long long acc[MAXC]
    _load(mul, mbuf, n * n * n)
    _load(r, rbuf, n * n)
    return bool(_nybe_acc(mbuf, n, p, rbuf, _mod(eps, p), acc))


def o_nybe_ok(mul, int n, long long p, r):
    cdef long long mbuf[MAXC]
    cdef long long rbuf[MAXC]
    cdef long long lhs[MAXN]
    cdef long long inner[MAXN]
    cdef int i, j, s, a, t, k
    cdef long long v, acc, ca, cb
    _load(mul, mbuf, n * n * n)
    _load(r, rbuf, n * n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs[k] = 0
            for a in range(n):
                ca = rbuf[i*n+a]        # hat(e_i*) = row i
                if ca == 0:
                    continue
                for s in range(n):
                    cb = rbuf[j*n+s]
                    if cb:
                        for k in range(n):
                            lhs[k] += ca * cb % p * mbuf[(a*n+s)*n+k] % p
            for s in range(n):
                v = 0
                for a in range(n):
                    ca = rbuf[i*n+a]
                    if ca:
                        v += ca * (mbuf[(a*n+s)*n+j] + mbuf[(s*n+a)*n+j]) % p
                    cb = rbuf[a*n+j]    # hat_t(e_j*) = column j
                    if cb:
                        v += cb * mbuf[(s*n+a)*n+i] % p
                inner[s] = -v
            for t in range(n):
                acc = lhs[t]
                for s in range(n):
                    acc -= inner[s] * rbuf[s*n+t] % p
                if _mod(acc, p) != 0:
                    return False
    return True


def invariant_symmetric_ok(mul, int n, long long p, s):
    cdef long long mbuf[MAXC]
    cdef long long sbuf[MAXC]
    cdef int x, i, j, a
    cdef long long acc
    _load(mul, mbuf, n * n * n)
    _load(s, sbuf, n * n)
    for x in range(n):
        for i in range(n):
            for j in range(n):
                acc = 0
                for a in range(n):
                    if sbuf[a*n+j]:
                        acc += sbuf[a*n+j] * mbuf[(x*n+a)*n+i] % p
                    if sbuf[i*n+a]:
                        acc += sbuf[i*n+a] * (mbuf[(x*n+a)*n+j] + mbuf[(a*n+x)*n+j]) % p
                if _mod(acc, p) != 0:
                    return False
    return True


def bilform_invariant_ok(mul, int n, long long p, b):
    cdef long long mbuf[MAXC]
    cdef long long bbuf[MAXC]
    cdef int i, j, k, t
    cdef long long acc
    _load(mul, mbuf, n * n * n)
    _load(b, bbuf, n * n)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                acc = 0
                for t in range(n):
                    acc += mbuf[(i*n+j)*n+t] * bbuf[t*n+k] % p
                    acc += (mbuf[(i*n+k)*n+t] + mbuf[(k*n+i)*n+t]) * bbuf[j*n+t] % p
                if _mod(acc, p) != 0:
                    return False
    return True
