# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: continued-fraction half-sum and conjugator box scans.

Same contracts as solnorm._fallback, restricted to inputs that provably fit
in 64-bit arithmetic (the dispatcher in solnorm._kernels checks the ranges
before calling in here).
"""


def bw_halfsum(long long p, long long q):
    """Half-sum of the b-sequence for |p|/|q|; p even nonzero, q nonzero, coprime."""
    cdef long long P = p if p >= 0 else -p
    cdef long long Q = q if q >= 0 else -q
    cdef long long total = 0
    cdef long long prev_a = 0, prev_b = 0
    cdef long long a, b, r
    cdef bint first = True
    while Q:
        a = P // Q
        r = P - a * Q
        if first or prev_b != prev_a or total & 1:
            b = a
        else:
            b = 0
        first = False
        total += b
        prev_a = a
        prev_b = b
        P = Q
        Q = r
    if total & 1:
        raise AssertionError("odd b-sequence sum %d for (%d, %d)" % (total, p, q))
    return total // 2


cdef inline bint _check_form(long long a, long long c, long long b, long long d,
                             long long w, long long x, long long y, long long z,
                             long long eps,
                             long long ta, long long tc, long long tb, long long td,
                             bint any_lower_n) nogil:
    # entries of P*A*P^-1 with P = (w, x; y, z), P^-1 = eps*(z, -x; -y, w)
    cdef long long r00 = w * a + x * b
    cdef long long r01 = w * c + x * d
    cdef long long r10 = y * a + z * b
    cdef long long r11 = y * c + z * d
    cdef long long m00 = eps * (r00 * z - r01 * y)
    cdef long long m01 = eps * (r01 * w - r00 * x)
    cdef long long m11 = eps * (r11 * w - r10 * x)
    cdef long long m10
    if any_lower_n:
        return m00 == -1 and m01 == 0 and m11 == -1
    m10 = eps * (r10 * z - r11 * y)
    return m00 == ta and m01 == tc and m10 == tb and m11 == td


def _scan(long long a, long long c, long long b, long long d,
          long long ta, long long tc, long long tb, long long td,
          long long bound, bint any_lower_n):
    cdef long long w, x, y, z, num, eps, prod
    for w in range(-bound, bound + 1):
        for x in range(-bound, bound + 1):
            if w == 0:
                # det = -x*y = +-1 forces |x| == |y| == 1
                if x != 1 and x != -1:
                    continue
                for y in range(-1, 2, 2):
                    eps = -x * y
                    for z in range(-bound, bound + 1):
                        if _check_form(a, c, b, d, w, x, y, z, eps, ta, tc, tb, td, any_lower_n):
                            return (w, x, y, z)
                continue
            for y in range(-bound, bound + 1):
                prod = x * y
                for eps in range(-1, 2, 2):
                    num = eps + prod
                    if num % w != 0:
                        continue
                    z = num // w
                    if z < -bound or z > bound:
                        continue
                    if _check_form(a, c, b, d, w, x, y, z, eps, ta, tc, tb, td, any_lower_n):
                        return (w, x, y, z)
    return None


def scan_conjugate_to(a, c, b, d, ta, tc, tb, td, bound):
    """First P in the box with P*(a,c;b,d)*P^-1 == (ta,tc;tb,td), else None."""
    return _scan(a, c, b, d, ta, tc, tb, td, bound, False)


def scan_meg_form(a, c, b, d, bound):
    """First P in the box taking (a,c;b,d) to the form (-1,0; n,-1), else None."""
    return _scan(a, c, b, d, 0, 0, 0, 0, bound, True)
