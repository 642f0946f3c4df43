"""Pure-Python kernel backend.

Mirrors _ckernels function for function.  The exhaustive scans are plain
loops (identical iteration order to the compiled backend, so witnesses
match exactly); the weight-distribution enumerations vectorize the inner
coordinate loops with numpy.  Inputs are plain lists of ints; outputs are
plain ints, tuples, and lists.
"""
from __future__ import annotations

import numpy as np

ARRAY_INPUTS = False


def segre_scan(fvals, log, alog, q):
    """First (a, x) where x -> (f(x+a)+f(a)) * x^(q-2) repeats a value, else None."""
    qm1 = q - 1
    for a in range(q):
        fa = fvals[a]
        seen = bytearray(q)
        for x in range(q):
            if x == 0:
                v = 0
            else:
                d = fvals[x ^ a] ^ fa
                v = 0 if d == 0 else alog[(log[d] + qm1 - log[x]) % qm1]
            if seen[v]:
                return (a, x)
            seen[v] = 1
    return None


def two_to_one_scan(fvals, log, alog, q):
    """First (u, v) with u != 0 where f(x)+ux takes the value v other than 0 or 2 times."""
    qm1 = q - 1
    for u in range(1, q):
        lu = log[u]
        counts = [0] * q
        for x in range(q):
            v = fvals[x] if x == 0 else fvals[x] ^ alog[(lu + log[x]) % qm1]
            counts[v] += 1
        for v in range(q):
            if counts[v] not in (0, 2):
                return (u, v)
    return None


def slope_scan(fvals, log, alog, q):
    """First pairwise-distinct (x, y, z) with equal secant slopes through x, else None."""
    qm1 = q - 1
    stamp = [-1] * q
    who = [0] * q
    for x in range(q):
        fx = fvals[x]
        for y in range(q):
            if y == x:
                continue
            d = fx ^ fvals[y]
            e = x ^ y
            s = 0 if d == 0 else alog[(log[d] + qm1 - log[e]) % qm1]
            if stamp[s] == x:
                return (x, who[s], y)
            stamp[s] = x
            who[s] = y
    return None


def _scalar_rows(row, log_a, alog_a, q):
    # table[a] = a * row, elementwise field product, shape (q, n)
    qm1 = q - 1
    n = row.shape[0]
    out = np.zeros((q, n), dtype=np.int64)
    nz = np.nonzero(row)[0]
    if nz.size:
        lr = log_a[row[nz]]
        la = log_a[np.arange(1, q)]
        out[1:, nz] = alog_a[(la[:, None] + lr[None, :]) % qm1]
    return out


def wdist_k3(g0, g1, g2, log, alog, q, n):
    """Exact weight histogram of the q^3 codewords of a 3-row generator."""
    log_a = np.asarray(log, dtype=np.int64)
    alog_a = np.asarray(alog, dtype=np.int64)
    r0 = np.asarray(g0, dtype=np.int64)
    r1 = np.asarray(g1, dtype=np.int64)
    r2 = np.asarray(g2, dtype=np.int64)
    qm1 = q - 1
    t0 = _scalar_rows(r0, log_a, alog_a, q)
    t1 = _scalar_rows(r1, log_a, alog_a, q)
    zc = np.nonzero(r2 == 0)[0]
    nz = np.nonzero(r2 != 0)[0]
    # log of 1/g2[j] for the nonzero columns; the coefficient c killing
    # column j of partial word p is then c = p_j / g2_j
    winv_log = (qm1 - log_a[r2[nz]]) % qm1
    hist = np.zeros(n + 1, dtype=np.int64)
    row_off = np.arange(q, dtype=np.int64)[:, None] * q
    for a in range(q):
        p = t0[a][None, :] ^ t1  # (q, n), indexed by b
        z0 = np.count_nonzero(p[:, zc] == 0, axis=1) if zc.size else np.zeros(q, dtype=np.int64)
        if nz.size:
            v = p[:, nz]
            safe = np.where(v == 0, 1, v)
            c = np.where(v == 0, 0, alog_a[(log_a[safe] + winv_log[None, :]) % qm1])
            votes = np.bincount((c + row_off).ravel(), minlength=q * q).reshape(q, q)
        else:
            votes = np.zeros((q, q), dtype=np.int64)
        weights = n - z0[:, None] - votes
        hist += np.bincount(weights.ravel(), minlength=n + 1)
    return hist.tolist()


def wdist_generic(rows, log, alog, q, n):
    """Exact weight histogram of the q^k codewords of a k-row generator."""
    log_a = np.asarray(log, dtype=np.int64)
    alog_a = np.asarray(alog, dtype=np.int64)
    k = len(rows)
    tabs = [_scalar_rows(np.asarray(r, dtype=np.int64), log_a, alog_a, q) for r in rows]
    hist = np.zeros(n + 1, dtype=np.int64)
    t0 = tabs[0]
    if k == 1:
        w = np.count_nonzero(t0, axis=1)
        hist += np.bincount(w, minlength=n + 1)
        return hist.tolist()

    batch_level1 = q * q * n * 8 <= 1 << 26

    def rec(level, partial):
        t = tabs[level]
        if level == 1:
            if batch_level1:
                p = partial[None, :] ^ t  # (q, n)
                w = np.count_nonzero(p[:, None, :] ^ t0[None, :, :], axis=2)
                hist[:] = hist + np.bincount(w.ravel(), minlength=n + 1)
            else:
                for v in range(q):
                    p = partial ^ t[v]
                    w = np.count_nonzero(p[None, :] ^ t0, axis=1)
                    hist[:] = hist + np.bincount(w, minlength=n + 1)
        else:
            for v in range(q):
                rec(level - 1, partial ^ t[v])

    rec(k - 1, np.zeros(n, dtype=np.int64))
    return hist.tolist()


def low_weight_messages_k3(g0, g1, g2, log, alog, q, n, target):
    """Projective representatives (a, b, c) whose codeword has the target weight."""
    log_a = np.asarray(log, dtype=np.int64)
    alog_a = np.asarray(alog, dtype=np.int64)
    t0 = _scalar_rows(np.asarray(g0, dtype=np.int64), log_a, alog_a, q)
    t1 = _scalar_rows(np.asarray(g1, dtype=np.int64), log_a, alog_a, q)
    t2 = _scalar_rows(np.asarray(g2, dtype=np.int64), log_a, alog_a, q)
    out = []
    for b in range(q):
        p = t0[1] ^ t1[b]
        w = np.count_nonzero(p[None, :] ^ t2, axis=1)
        out.extend((1, b, int(c)) for c in np.nonzero(w == target)[0])
    w = np.count_nonzero(t1[1][None, :] ^ t2, axis=1)
    out.extend((0, 1, int(c)) for c in np.nonzero(w == target)[0])
    if int(np.count_nonzero(t2[1])) == target:
        out.append((0, 0, 1))
    return out


def dependent_triples_k3(g0, g1, g2, log, alog, q, n):
    """All column triples (i<j<k) of a 3-row generator that are linearly dependent.

    Each entry is (i, j, k, vi, vj, vk): the dependency coefficients,
    scaled so the first nonzero one is 1.  Rank <= 1 triples come back
    with coefficients (0, 0, 0); callers treat those as degenerate.
    """
    qm1 = q - 1

    def fm(a, b):
        if a == 0 or b == 0:
            return 0
        return alog[(log[a] + log[b]) % qm1]

    def fi(a):
        return alog[(qm1 - log[a]) % qm1]

    out = []
    for i in range(n):
        ai, bi, ci = g0[i], g1[i], g2[i]
        for j in range(i + 1, n):
            aj, bj, cj = g0[j], g1[j], g2[j]
            m_bc = fm(bi, cj) ^ fm(bj, ci)
            m_ac = fm(ai, cj) ^ fm(aj, ci)
            m_ab = fm(ai, bj) ^ fm(aj, bi)
            for k in range(j + 1, n):
                det = fm(g0[k], m_bc) ^ fm(g1[k], m_ac) ^ fm(g2[k], m_ab)
                if det:
                    continue
                rows = (
                    (ai, aj, g0[k]),
                    (bi, bj, g1[k]),
                    (ci, cj, g2[k]),
                )
                v = (0, 0, 0)
                for r, s in ((0, 1), (0, 2), (1, 2)):
                    p = rows[r]
                    t = rows[s]
                    cand = (
                        fm(p[1], t[2]) ^ fm(p[2], t[1]),
                        fm(p[2], t[0]) ^ fm(p[0], t[2]),
                        fm(p[0], t[1]) ^ fm(p[1], t[0]),
                    )
                    if cand != (0, 0, 0):
                        v = cand
                        break
                if v != (0, 0, 0):
                    lead = next(x for x in v if x)
                    s = fi(lead)
                    v = (fm(v[0], s), fm(v[1], s), fm(v[2], s))
                out.append((i, j, k, v[0], v[1], v[2]))
    return out
