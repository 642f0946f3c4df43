# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel backend.

Mirrors _pykernels function for function: same signatures (modulo array
inputs), same iteration order, same witnesses.  Inputs arrive as
contiguous C-int arrays prepared by the dispatch layer; q, n and target
are plain ints.  All field arithmetic goes through the log/antilog
tables, so only nonzero operands are ever looked up in the log table.
"""

import numpy as np

ARRAY_INPUTS = True


cdef inline int _fm(int a, int b, const int[::1] log, const int[::1] alog, int qm1) noexcept:
    if a == 0 or b == 0:
        return 0
    return alog[(log[a] + log[b]) % qm1]


cdef inline int _fi(int a, const int[::1] log, const int[::1] alog, int qm1) noexcept:
    return alog[(qm1 - log[a]) % qm1]


def segre_scan(const int[::1] fvals, const int[::1] log, const int[::1] alog, int q):
    """First (a, x) where x -> (f(x+a)+f(a)) * x^(q-2) repeats a value, else None."""
    cdef int qm1 = q - 1
    cdef int a, x, v, d, fa
    seen_a = np.zeros(q, dtype=np.uint8)
    cdef unsigned char[::1] seen = seen_a
    for a in range(q):
        fa = fvals[a]
        for x in range(q):
            seen[x] = 0
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


def two_to_one_scan(const int[::1] fvals, const int[::1] log, const int[::1] alog, int q):
    """First (u, v) with u != 0 where f(x)+ux takes the value v other than 0 or 2 times."""
    cdef int qm1 = q - 1
    cdef int u, x, v, lu
    counts_a = np.zeros(q, dtype=np.intc)
    cdef int[::1] counts = counts_a
    for u in range(1, q):
        lu = log[u]
        for v in range(q):
            counts[v] = 0
        for x in range(q):
            v = fvals[x] if x == 0 else fvals[x] ^ alog[(lu + log[x]) % qm1]
            counts[v] += 1
        for v in range(q):
            if counts[v] != 0 and counts[v] != 2:
                return (u, v)
    return None


def slope_scan(const int[::1] fvals, const int[::1] log, const int[::1] alog, int q):
    """First pairwise-distinct (x, y, z) with equal secant slopes through x, else None."""
    cdef int qm1 = q - 1
    cdef int x, y, d, e, s, fx
    stamp_a = np.full(q, -1, dtype=np.intc)
    who_a = np.zeros(q, dtype=np.intc)
    cdef int[::1] stamp = stamp_a
    cdef int[::1] who = who_a
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


cdef void _scalar_rows(const int[::1] row, const int[::1] log, const int[::1] alog,
                       int q, int n, int[:, ::1] out) noexcept:
    # out[a, j] = a * row[j], elementwise field product
    cdef int qm1 = q - 1
    cdef int a, j, la
    for j in range(n):
        out[0, j] = 0
    for a in range(1, q):
        la = log[a]
        for j in range(n):
            out[a, j] = 0 if row[j] == 0 else alog[(la + log[row[j]]) % qm1]


def wdist_k3(const int[::1] g0, const int[::1] g1, const int[::1] g2,
             const int[::1] log, const int[::1] alog, int q, int n):
    """Exact weight histogram of the q^3 codewords of a 3-row generator."""
    cdef int qm1 = q - 1
    cdef int a, b, c, t, j, z0, pj
    t0_a = np.zeros((q, n), dtype=np.intc)
    t1_a = np.zeros((q, n), dtype=np.intc)
    cdef int[:, ::1] t0 = t0_a
    cdef int[:, ::1] t1 = t1_a
    _scalar_rows(g0, log, alog, q, n, t0)
    _scalar_rows(g1, log, alog, q, n, t1)
    # split columns by whether the third row is zero there; for nonzero
    # columns the coefficient killing column j of partial word p is p_j/g2_j
    zc_a = np.zeros(n, dtype=np.intc)
    nzc_a = np.zeros(n, dtype=np.intc)
    winv_a = np.zeros(n, dtype=np.intc)
    cdef int[::1] zc = zc_a
    cdef int[::1] nzc = nzc_a
    cdef int[::1] winv = winv_a
    cdef int n_z = 0, n_nz = 0
    for j in range(n):
        if g2[j] == 0:
            zc[n_z] = j
            n_z += 1
        else:
            nzc[n_nz] = j
            winv[n_nz] = (qm1 - log[g2[j]]) % qm1
            n_nz += 1
    hist_a = np.zeros(n + 1, dtype=np.longlong)
    votes_a = np.zeros(q, dtype=np.intc)
    cdef long long[::1] hist = hist_a
    cdef int[::1] votes = votes_a
    for a in range(q):
        for b in range(q):
            z0 = 0
            for t in range(n_z):
                j = zc[t]
                if (t0[a, j] ^ t1[b, j]) == 0:
                    z0 += 1
            for c in range(q):
                votes[c] = 0
            for t in range(n_nz):
                j = nzc[t]
                pj = t0[a, j] ^ t1[b, j]
                if pj == 0:
                    votes[0] += 1
                else:
                    votes[alog[(log[pj] + winv[t]) % qm1]] += 1
            for c in range(q):
                hist[n - z0 - votes[c]] += 1
    return [int(hist[j]) for j in range(n + 1)]


cdef void _wdist_rec(int level, const int[:, :, ::1] tabs, int[:, ::1] partial,
                     long long[::1] hist, int q, int n) noexcept:
    cdef int v, u, j, w
    if level == 1:
        for v in range(q):
            for j in range(n):
                partial[0, j] = partial[1, j] ^ tabs[1, v, j]
            for u in range(q):
                w = 0
                for j in range(n):
                    if partial[0, j] ^ tabs[0, u, j]:
                        w += 1
                hist[w] += 1
    else:
        for v in range(q):
            for j in range(n):
                partial[level - 1, j] = partial[level, j] ^ tabs[level, v, j]
            _wdist_rec(level - 1, tabs, partial, hist, q, n)


def wdist_generic(const int[:, ::1] rows, const int[::1] log, const int[::1] alog,
                  int q, int n):
    """Exact weight histogram of the q^k codewords of a k-row generator."""
    cdef int k = rows.shape[0]
    cdef int r, v, j, w
    tabs_a = np.zeros((k, q, n), dtype=np.intc)
    cdef int[:, :, ::1] tabs = tabs_a
    for r in range(k):
        _scalar_rows(rows[r], log, alog, q, n, tabs[r])
    hist_a = np.zeros(n + 1, dtype=np.longlong)
    cdef long long[::1] hist = hist_a
    if k == 1:
        for v in range(q):
            w = 0
            for j in range(n):
                if tabs[0, v, j]:
                    w += 1
            hist[w] += 1
        return [int(hist[j]) for j in range(n + 1)]
    partial_a = np.zeros((k, n), dtype=np.intc)
    cdef int[:, ::1] partial = partial_a
    _wdist_rec(k - 1, tabs, partial, hist, q, n)
    return [int(hist[j]) for j in range(n + 1)]


def low_weight_messages_k3(const int[::1] g0, const int[::1] g1, const int[::1] g2,
                           const int[::1] log, const int[::1] alog, int q, int n,
                           int target):
    """Projective representatives (a, b, c) whose codeword has the target weight."""
    cdef int b, c, j, w
    t0_a = np.zeros((q, n), dtype=np.intc)
    t1_a = np.zeros((q, n), dtype=np.intc)
    t2_a = np.zeros((q, n), dtype=np.intc)
    cdef int[:, ::1] t0 = t0_a
    cdef int[:, ::1] t1 = t1_a
    cdef int[:, ::1] t2 = t2_a
    _scalar_rows(g0, log, alog, q, n, t0)
    _scalar_rows(g1, log, alog, q, n, t1)
    _scalar_rows(g2, log, alog, q, n, t2)
    p_a = np.zeros(n, dtype=np.intc)
    cdef int[::1] p = p_a
    out = []
    for b in range(q):
        for j in range(n):
            p[j] = t0[1, j] ^ t1[b, j]
        for c in range(q):
            w = 0
            for j in range(n):
                if p[j] ^ t2[c, j]:
                    w += 1
            if w == target:
                out.append((1, b, c))
    for c in range(q):
        w = 0
        for j in range(n):
            if t1[1, j] ^ t2[c, j]:
                w += 1
        if w == target:
            out.append((0, 1, c))
    w = 0
    for j in range(n):
        if t2[1, j]:
            w += 1
    if w == target:
        out.append((0, 0, 1))
    return out


def dependent_triples_k3(const int[::1] g0, const int[::1] g1, const int[::1] g2,
                         const int[::1] log, const int[::1] alog, int q, int n):
    """All column triples (i<j<k) of a 3-row generator that are linearly dependent.

    Each entry is (i, j, k, vi, vj, vk): the dependency coefficients,
    scaled so the first nonzero one is 1.  Rank <= 1 triples come back
    with coefficients (0, 0, 0); callers treat those as degenerate.
    """
    cdef int qm1 = q - 1
    cdef int i, j, k, t, det, m_bc, m_ac, m_ab
    cdef int ai, bi, ci, aj, bj, cj
    cdef int v0, v1, v2, c0, c1, c2, lead, s, pr, ps
    cdef int rmat[3][3]
    cdef int pairs[3][2]
    pairs[0][0] = 0; pairs[0][1] = 1
    pairs[1][0] = 0; pairs[1][1] = 2
    pairs[2][0] = 1; pairs[2][1] = 2
    out = []
    for i in range(n):
        ai = g0[i]; bi = g1[i]; ci = g2[i]
        for j in range(i + 1, n):
            aj = g0[j]; bj = g1[j]; cj = g2[j]
            m_bc = _fm(bi, cj, log, alog, qm1) ^ _fm(bj, ci, log, alog, qm1)
            m_ac = _fm(ai, cj, log, alog, qm1) ^ _fm(aj, ci, log, alog, qm1)
            m_ab = _fm(ai, bj, log, alog, qm1) ^ _fm(aj, bi, log, alog, qm1)
            for k in range(j + 1, n):
                det = (_fm(g0[k], m_bc, log, alog, qm1)
                       ^ _fm(g1[k], m_ac, log, alog, qm1)
                       ^ _fm(g2[k], m_ab, log, alog, qm1))
                if det:
                    continue
                rmat[0][0] = ai; rmat[0][1] = aj; rmat[0][2] = g0[k]
                rmat[1][0] = bi; rmat[1][1] = bj; rmat[1][2] = g1[k]
                rmat[2][0] = ci; rmat[2][1] = cj; rmat[2][2] = g2[k]
                v0 = 0; v1 = 0; v2 = 0
                for t in range(3):
                    pr = pairs[t][0]
                    ps = pairs[t][1]
                    c0 = (_fm(rmat[pr][1], rmat[ps][2], log, alog, qm1)
                          ^ _fm(rmat[pr][2], rmat[ps][1], log, alog, qm1))
                    c1 = (_fm(rmat[pr][2], rmat[ps][0], log, alog, qm1)
                          ^ _fm(rmat[pr][0], rmat[ps][2], log, alog, qm1))
                    c2 = (_fm(rmat[pr][0], rmat[ps][1], log, alog, qm1)
                          ^ _fm(rmat[pr][1], rmat[ps][0], log, alog, qm1))
                    if c0 | c1 | c2:
                        v0 = c0; v1 = c1; v2 = c2
                        break
                if v0 | v1 | v2:
                    lead = v0 if v0 else (v1 if v1 else v2)
                    s = _fi(lead, log, alog, qm1)
                    v0 = _fm(v0, s, log, alog, qm1)
                    v1 = _fm(v1, s, log, alog, qm1)
                    v2 = _fm(v2, s, log, alog, qm1)
                out.append((i, j, k, v0, v1, v2))
    return out
