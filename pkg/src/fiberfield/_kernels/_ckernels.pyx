# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed integer polynomial kernels.

Same contract as ``_pykernels``: lists of Python ints in, lists of Python
ints out.  Values cross the boundary as little-endian byte strings so this
module never shares GMP objects with any other extension.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct mpz_t[1]
    ctypedef __mpz_struct *mpz_ptr
    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set_si(mpz_ptr, long)
    void mpz_set_ui(mpz_ptr, unsigned long)
    void mpz_set(mpz_ptr, mpz_ptr)
    long mpz_get_si(mpz_ptr)
    int mpz_fits_slong_p(mpz_ptr)
    int mpz_sgn(mpz_ptr)
    void mpz_neg(mpz_ptr, mpz_ptr)
    void mpz_abs(mpz_ptr, mpz_ptr)
    void mpz_add(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_sub(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_sub_ui(mpz_ptr, mpz_ptr, unsigned long)
    void mpz_mul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_addmul(mpz_ptr, mpz_ptr, mpz_ptr)
    void mpz_mul_2exp(mpz_ptr, mpz_ptr, unsigned long)
    void mpz_setbit(mpz_ptr, unsigned long)
    size_t mpz_sizeinbase(mpz_ptr, int)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void *)
    void *mpz_export(void *, size_t *, int, size_t, int, size_t, mpz_ptr)


cdef Py_ssize_t SCHOOLBOOK_CUTOFF = 24


cdef void _load(mpz_ptr r, object x) except *:
    cdef bytes raw
    cdef Py_ssize_t nb
    if -0x3fffffffffffffff <= x <= 0x3fffffffffffffff:
        mpz_set_si(r, <long>x)
        return
    neg = x < 0
    ax = -x if neg else x
    nb = (ax.bit_length() + 7) // 8
    raw = ax.to_bytes(nb, "little")
    mpz_import(r, nb, -1, 1, 0, 0, <const char *>raw)
    if neg:
        mpz_neg(r, r)


cdef object _store(mpz_ptr r):
    cdef size_t count = 0
    cdef size_t nb
    cdef unsigned char *buf
    if mpz_fits_slong_p(r):
        return mpz_get_si(r)
    nb = (mpz_sizeinbase(r, 2) + 7) // 8
    buf = <unsigned char *>malloc(nb + 1)
    try:
        mpz_export(buf, &count, -1, 1, 0, 0, r)
        v = int.from_bytes(buf[:count], "little")
    finally:
        free(buf)
    return -v if mpz_sgn(r) < 0 else v


cdef mpz_ptr _alloc(Py_ssize_t n, list src) except NULL:
    cdef mpz_ptr arr = <mpz_ptr>malloc(max(n, 1) * sizeof(__mpz_struct))
    cdef Py_ssize_t i
    for i in range(n):
        mpz_init(&arr[i])
        if src is not None:
            _load(&arr[i], src[i])
    return arr


cdef void _release(mpz_ptr arr, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        mpz_clear(&arr[i])
    free(arr)


def poly_mul(list a, list b):
    """Product of two integer polynomials."""
    cdef Py_ssize_t na = len(a), nb = len(b), n, i, j
    if na == 0 or nb == 0:
        return []
    n = na + nb - 1
    cdef mpz_ptr A = _alloc(na, a)
    cdef mpz_ptr B = _alloc(nb, b)
    cdef mpz_ptr C
    try:
        if min(na, nb) <= SCHOOLBOOK_CUTOFF:
            C = _alloc(n, None)
            try:
                for i in range(na):
                    if mpz_sgn(&A[i]) == 0:
                        continue
                    for j in range(nb):
                        mpz_addmul(&C[i + j], &A[i], &B[j])
                return [_store(&C[i]) for i in range(n)]
            finally:
                _release(C, n)
        return _kronecker(A, na, B, nb)
    finally:
        _release(A, na)
        _release(B, nb)


cdef list _kronecker(mpz_ptr A, Py_ssize_t na, mpz_ptr B, Py_ssize_t nb):
    cdef Py_ssize_t n = na + nb - 1, i, k
    cdef size_t ba = 0, bb = 0, s, width
    cdef size_t count = 0
    cdef unsigned char *buf
    cdef mpz_t PA, PB, half, chunk
    for i in range(na):
        s = mpz_sizeinbase(&A[i], 2)
        if s > ba:
            ba = s
    for i in range(nb):
        s = mpz_sizeinbase(&B[i], 2)
        if s > bb:
            bb = s
    width = ba + bb + <size_t>(int(min(na, nb)).bit_length()) + 2
    width = ((width + 7) // 8) * 8
    mpz_init(PA); mpz_init(PB); mpz_init(half); mpz_init(chunk)
    try:
        for i in range(na - 1, -1, -1):
            mpz_mul_2exp(PA, PA, width)
            mpz_add(PA, PA, &A[i])
        for i in range(nb - 1, -1, -1):
            mpz_mul_2exp(PB, PB, width)
            mpz_add(PB, PB, &B[i])
        mpz_mul(PA, PA, PB)
        # offset every slot by 2^(width-1) so digits are carry-free and nonnegative
        for k in range(n):
            mpz_setbit(half, k * width + width - 1)
        mpz_add(PA, PA, half)
        buf = <unsigned char *>malloc(n * (width // 8) + 8)
        memset(buf, 0, n * (width // 8) + 8)
        try:
            mpz_export(buf, &count, -1, 1, 0, 0, PA)
            out = []
            mpz_set_ui(half, 0)
            mpz_setbit(half, width - 1)
            for k in range(n):
                mpz_import(chunk, width // 8, -1, 1, 0, 0, buf + k * (width // 8))
                mpz_sub(chunk, chunk, half)
                out.append(_store(chunk))
            return out
        finally:
            free(buf)
    finally:
        mpz_clear(PA); mpz_clear(PB); mpz_clear(half); mpz_clear(chunk)


def hom_eval(forms, p, q):
    """Evaluate each binary form sum c_k p^k q^(d-k) at (p, q)."""
    cdef Py_ssize_t d = max(len(f) for f in forms) - 1, k, m
    cdef mpz_t P, R, T
    cdef mpz_ptr Q = _alloc(d + 1, None)
    cdef mpz_ptr F
    mpz_init(P); mpz_init(R); mpz_init(T)
    try:
        _load(P, p)
        _load(&Q[0], 1)
        if d >= 1:
            _load(&Q[1], q)
        for k in range(2, d + 1):
            mpz_mul(&Q[k], &Q[k - 1], &Q[1])
        out = []
        for f in forms:
            f = list(f) + [0] * (d + 1 - len(f))
            m = d + 1
            F = _alloc(m, f)
            try:
                mpz_set(R, &F[d])
                for k in range(d - 1, -1, -1):
                    mpz_mul(R, R, P)
                    if mpz_sgn(&F[k]) != 0:
                        mpz_addmul(R, &F[k], &Q[d - k])
                out.append(_store(R))
            finally:
                _release(F, m)
        return out
    finally:
        mpz_clear(P); mpz_clear(R); mpz_clear(T)
        _release(Q, d + 1)
