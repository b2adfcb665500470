"""Pure-Python integer polynomial kernels.

Polynomials are lists of Python ints, lowest degree first.  These are the
reference versions; ``_ckernels`` implements the same functions on top of GMP.
"""

SCHOOLBOOK_CUTOFF = 24


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(coeffs, nbytes):
    # coefficients must be nonnegative and < 256**nbytes
    return int.from_bytes(
        b"".join(c.to_bytes(nbytes, "little") for c in coeffs), "little")


def _split_signs(a):
    pos = [x if x > 0 else 0 for x in a]
    neg = [-x if x < 0 else 0 for x in a]
    return pos, neg


def poly_mul(a, b):
    """Product of two integer polynomials (Kronecker substitution above the cutoff)."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= SCHOOLBOOK_CUTOFF:
        return _schoolbook(a, b)
    n = len(a) + len(b) - 1
    bound = (max(abs(x) for x in a).bit_length()
             + max(abs(x) for x in b).bit_length()
             + min(len(a), len(b)).bit_length() + 2)
    nbytes = (bound + 7) // 8
    ap, an = _split_signs(a)
    bp, bn = _split_signs(b)
    A = _pack(ap, nbytes) - _pack(an, nbytes)
    B = _pack(bp, nbytes) - _pack(bn, nbytes)
    half = 1 << (8 * nbytes - 1)
    offset = _pack([half] * n, nbytes)
    raw = (A * B + offset).to_bytes(n * nbytes, "little")
    return [int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") - half
            for k in range(n)]


def hom_eval(forms, p, q):
    """Evaluate each binary form sum c_k p^k q^(d-k) at (p, q).

    All forms are homogenised to the same degree d = max(len) - 1.
    """
    d = max(len(f) for f in forms) - 1
    qpow = [1] * (d + 1)
    for k in range(1, d + 1):
        qpow[k] = qpow[k - 1] * q
    out = []
    for f in forms:
        f = list(f) + [0] * (d + 1 - len(f))
        r = f[d]
        for k in range(d - 1, -1, -1):
            r = r * p
            if f[k]:
                r += f[k] * qpow[d - k]
        out.append(r)
    return out
