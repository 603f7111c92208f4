"""Vectorized numpy versions of the compiled kernels.

Form arithmetic runs on whole batches: every branch of the composition
algorithm is evaluated with masks, and loops run until every lane settles.
"""

import numpy as np


def _isqrt(n):
    r = np.floor(np.sqrt(n.astype(np.float64))).astype(np.int64)
    r -= r * r > n
    r += (r + 1) * (r + 1) <= n
    return r


def reduced_forms(D):
    D = int(D)
    amax = int(np.sqrt(-D // 3))
    while (amax + 1) * (amax + 1) * 3 <= -D:
        amax += 1
    while amax * amax * 3 > -D:
        amax -= 1
    parity = D & 1
    chunks = []
    for a in range(1, amax + 1):
        start = -a + 1
        if (start & 1) != parity:
            start += 1
        b = np.arange(start, a + 1, 2, dtype=np.int64)
        num = b * b - D
        b = b[num % (4 * a) == 0]
        if b.size == 0:
            continue
        c = (b * b - D) // (4 * a)
        keep = (c >= a) & ~((b < 0) & (c == a))
        b, c = b[keep], c[keep]
        keep = np.gcd(np.gcd(a, b), c) == 1
        b, c = b[keep], c[keep]
        if b.size:
            chunks.append(np.column_stack((np.full(b.size, a, dtype=np.int64), b, c)))
    if not chunks:
        return np.empty((0, 3), dtype=np.int64)
    return np.concatenate(chunks)


def _xgcd(a, b):
    old_r, r = a.copy(), b.copy()
    old_s, s = np.ones_like(a), np.zeros_like(a)
    old_t, t = np.zeros_like(a), np.ones_like(a)
    live = r != 0
    while live.any():
        q = np.zeros_like(a)
        q[live] = old_r[live] // r[live]
        old_r, r = np.where(live, r, old_r), np.where(live, old_r - q * r, r)
        old_s, s = np.where(live, s, old_s), np.where(live, old_s - q * s, s)
        old_t, t = np.where(live, t, old_t), np.where(live, old_t - q * t, t)
        live = r != 0
    neg = old_r < 0
    return np.where(neg, -old_r, old_r), np.where(neg, -old_s, old_s), np.where(neg, -old_t, old_t)


def _reduce(a, b, c):
    a, b, c = a.copy(), b.copy(), c.copy()
    while True:
        off = ~((-a < b) & (b <= a))
        if off.any():
            k = (a[off] - b[off]) // (2 * a[off])
            c[off] = a[off] * k * k + b[off] * k + c[off]
            b[off] = b[off] + 2 * a[off] * k
        swap = a > c
        if not swap.any():
            break
        a[swap], b[swap], c[swap] = c[swap], -b[swap], a[swap]
    flip = (a == c) & (b < 0)
    b[flip] = -b[flip]
    return a, b, c


def _compose(f, g, D):
    swap = f[:, 0] > g[:, 0]
    lo = np.where(swap[:, None], g, f)
    hi = np.where(swap[:, None], f, g)
    a1, b1 = lo[:, 0], lo[:, 1]
    a2, b2, c2 = hi[:, 0], hi[:, 1], hi[:, 2]
    s = (b1 + b2) // 2
    n = b2 - s

    divides = a2 % a1 == 0
    g1, u, _ = _xgcd(a2, a1)
    y1 = np.where(divides, 0, u)
    d = np.where(divides, a1, g1)

    exact = s % d == 0
    g2, x2, y2 = _xgcd(s, d)
    d1 = np.where(exact, d, g2)
    x2 = np.where(exact, 0, x2)
    y2 = np.where(exact, -1, -y2)

    v1 = a1 // d1
    v2 = a2 // d1
    r = ((y1 % v1) * (y2 % v1) % v1 * (n % v1) - (x2 % v1) * (c2 % v1)) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    c3 = (b3 * b3 - D) // (4 * a3)
    return np.column_stack(_reduce(a3, b3, c3))


def compose_pairs(left, right, D):
    if left.shape[0] == 0:
        return left.copy()
    return _compose(left, right, np.int64(D))


def forms_pow(forms, exps, D):
    D = np.int64(D)
    m = forms.shape[0]
    pb = int(D) & 1
    result = np.tile(np.array([1, pb, (pb - int(D)) // 4], dtype=np.int64), (m, 1))
    base = forms.astype(np.int64).copy()
    e = np.asarray(exps, dtype=np.int64).copy()
    while True:
        odd = (e & 1) == 1
        if odd.any():
            result[odd] = _compose(result[odd], base[odd], D)
        e >>= 1
        live = e > 0
        if not live.any():
            break
        base[live] = _compose(base[live], base[live], D)
    return result


def r3_count(N):
    N = int(N)
    total = 0
    x = 0
    while x * x <= N:
        rx = N - x * x
        ymax = int(np.sqrt(rx))
        while ymax * ymax > rx:
            ymax -= 1
        while (ymax + 1) * (ymax + 1) <= rx:
            ymax += 1
        y = np.arange(0, ymax + 1, dtype=np.int64)
        rem = rx - y * y
        z = _isqrt(rem)
        hit = z * z == rem
        w = np.where(y[hit] > 0, 2, 1) * np.where(z[hit] > 0, 2, 1)
        total += (2 if x else 1) * int(w.sum())
        x += 1
    return total
