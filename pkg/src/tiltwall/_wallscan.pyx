# cython: language_level=3
"""Compiled candidate scan for wall enumeration.

Same algorithm as tiltwall._wallscan_py.scan_candidates, with 64-bit C
integers in the inner loop.  The caller guarantees the inputs are small
enough that no intermediate product overflows (see the dispatch logic in
tiltwall.walls)."""


def scan_candidates(long long P0, long long P1, long long T2, long long R,
                    long long DS, long long w0_lo, long long w0_hi,
                    long long bln, long long bld, long long bhn, long long bhd):
    cdef long long R2 = R * R
    cdef long long Dd = bld * bhd
    cdef long long DD = R * Dd
    cdef long long w0, w1, t, Rw0, M, MR, N
    cdef long long m1, m2, mmin, u1, u2, umax, Uv, w1_lo, w1_hi
    cdef long long c, b, q, tlo, thi
    cdef bint has_lo, has_hi, ok
    cdef int k
    cdef long long cc[3]
    cdef long long cb[3]
    out = []
    for w0 in range(w0_lo, w0_hi + 1):
        if w0 == 0 and P0 == 0:
            continue
        Rw0 = R * w0
        m1 = bln * w0 * bhd
        m2 = bhn * w0 * bld
        mmin = m1 if m1 < m2 else m2
        w1_lo = mmin // Dd + 1
        u1 = bln * bhd * (Rw0 - P0)
        u2 = bhn * bld * (Rw0 - P0)
        umax = u1 if u1 > u2 else u2
        Uv = P1 * Dd + umax
        w1_hi = (Uv - 1) // DD
        M = P0 - Rw0
        MR = M * R
        for w1 in range(w1_lo, w1_hi + 1):
            N = P1 - R * w1
            cc[0] = w0
            cb[0] = w1 * w1
            cc[1] = -MR
            cb[1] = N * N - M * T2
            cc[2] = MR - R2 * w0
            cb[2] = DS - R2 * w1 * w1 - N * N + M * T2
            has_lo = has_hi = False
            tlo = thi = 0
            ok = True
            for k in range(3):
                c = cc[k]
                b = cb[k]
                if c > 0:
                    q = b // c
                    if (not has_hi) or q < thi:
                        thi = q
                        has_hi = True
                elif c < 0:
                    q = -(b // (-c))
                    if (not has_lo) or q > tlo:
                        tlo = q
                        has_lo = True
                elif b < 0:
                    ok = False
                    break
            if not ok or not has_lo or not has_hi:
                continue
            t = tlo + ((w1 - tlo) % 2)
            while t <= thi:
                out.append((w0, w1, t))
                t += 2
    return out
