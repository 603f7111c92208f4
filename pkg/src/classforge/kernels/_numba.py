"""numba-compiled kernels. Same signatures as ``_numpy``; int64 throughout."""

import numpy as np
from numba import njit

_opts = dict(cache=True, nogil=True)


@njit(**_opts)
def _isqrt(n):
    r = np.int64(np.sqrt(np.float64(n)))
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit(**_opts)
def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit(**_opts)
def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = np.int64(1), np.int64(0)
    old_t, t = np.int64(0), np.int64(1)
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@njit(**_opts)
def _scan_reduced(D, out, fill):
    amax = _isqrt(-D // 3)
    parity = D & 1
    k = 0
    for a in range(1, amax + 1):
        four_a = 4 * a
        start = -a + 1
        if (start & 1) != parity:
            start += 1
        for b in range(start, a + 1, 2):
            num = b * b - D
            if num % four_a:
                continue
            c = num // four_a
            if c < a or (b < 0 and c == a):
                continue
            if _gcd(_gcd(a, b), c) != 1:
                continue
            if fill:
                out[k, 0] = a
                out[k, 1] = b
                out[k, 2] = c
            k += 1
    return k


@njit(**_opts)
def reduced_forms(D):
    dummy = np.empty((0, 3), dtype=np.int64)
    h = _scan_reduced(D, dummy, False)
    out = np.empty((h, 3), dtype=np.int64)
    _scan_reduced(D, out, True)
    return out


@njit(**_opts)
def _reduce(a, b, c):
    while True:
        if not (-a < b <= a):
            k = (a - b) // (2 * a)
            c = a * k * k + b * k + c
            b = b + 2 * a * k
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return a, b, c


@njit(**_opts)
def _compose(a1, b1, c1, a2, b2, c2, D):
    if a1 > a2:
        a1, b1, c1, a2, b2, c2 = a2, b2, c2, a1, b1, c1
    s = (b1 + b2) // 2
    n = b2 - s
    if a2 % a1 == 0:
        y1 = np.int64(0)
        d = a1
    else:
        d, u, _ = _xgcd(a2, a1)
        y1 = u
    if s % d == 0:
        y2 = np.int64(-1)
        x2 = np.int64(0)
        d1 = d
    else:
        d1, x2, y2 = _xgcd(s, d)
        y2 = -y2
    v1 = a1 // d1
    v2 = a2 // d1
    r = ((y1 % v1) * (y2 % v1) % v1 * (n % v1) - (x2 % v1) * (c2 % v1)) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - D) // (4 * a3)
    return _reduce(a3, b3, c3)


@njit(**_opts)
def forms_pow(forms, exps, D):
    m = forms.shape[0]
    out = np.empty((m, 3), dtype=np.int64)
    pa = np.int64(1)
    pb = D & 1
    pc = (pb - D) // 4
    for i in range(m):
        ra, rb, rc = pa, pb, pc
        xa, xb, xc = forms[i, 0], forms[i, 1], forms[i, 2]
        e = exps[i]
        while e > 0:
            if e & 1:
                ra, rb, rc = _compose(ra, rb, rc, xa, xb, xc, D)
            e >>= 1
            if e:
                xa, xb, xc = _compose(xa, xb, xc, xa, xb, xc, D)
        out[i, 0] = ra
        out[i, 1] = rb
        out[i, 2] = rc
    return out


@njit(**_opts)
def compose_pairs(left, right, D):
    m = left.shape[0]
    out = np.empty((m, 3), dtype=np.int64)
    for i in range(m):
        a, b, c = _compose(left[i, 0], left[i, 1], left[i, 2],
                           right[i, 0], right[i, 1], right[i, 2], D)
        out[i, 0] = a
        out[i, 1] = b
        out[i, 2] = c
    return out


@njit(**_opts)
def r3_count(N):
    total = np.int64(0)
    x = np.int64(0)
    while x * x <= N:
        rx = N - x * x
        wx = 2 if x else 1
        y = np.int64(0)
        while y * y <= rx:
            rem = rx - y * y
            z = _isqrt(rem)
            if z * z == rem:
                total += wx * (2 if y else 1) * (2 if z else 1)
            y += 1
        x += 1
    return total
