"""Pure-Python kernels.

These are the reference implementations of the two hot inner loops:

* ``bw_halfsum`` -- the continued-fraction half-sum behind the Bredon-Wood
  invariant N(p, q);
* ``scan_conjugate_to`` / ``scan_meg_form`` -- exhaustive searches for a
  unimodular conjugator with bounded entries.

``solnorm._speedups`` reimplements them in Cython for machine-sized inputs;
``solnorm._kernels`` picks the backend at import time.  Everything here runs
on Python's arbitrary-precision integers, so there is no overflow to guard
against.
"""

from __future__ import annotations

from math import gcd


def bw_halfsum(p: int, q: int) -> int:
    """Half-sum of the b-sequence of the continued fraction of |p|/|q|.

    Preconditions (enforced by the caller): p is even and nonzero, q is
    nonzero, gcd(|p|, |q|) == 1.  The b-sequence keeps a term of the
    continued fraction when the previous term was altered or the running
    sum is odd, and zeroes it otherwise; the total is always even.
    """
    P, Q = abs(p), abs(q)
    total = 0
    prev_a = prev_b = None
    while Q:
        a, r = divmod(P, Q)
        if prev_a is None or prev_b != prev_a or total % 2 == 1:
            b = a
        else:
            b = 0
        total += b
        prev_a, prev_b = a, b
        P, Q = Q, r
    if total % 2 != 0:
        raise AssertionError(f"odd b-sequence sum {total} for ({p}, {q})")
    return total // 2


def _t_interval(base: int, step: int, bound: int) -> tuple[int, int] | None:
    """Integer t with -bound <= base + t*step <= bound, or None if empty."""
    if step == 0:
        return (0, 0) if -bound <= base <= bound else None
    lo, hi = -bound - base, bound - base
    if step < 0:
        lo, hi, step = -hi, -lo, -step
    tmin = -((-lo) // step)
    tmax = hi // step
    if tmin > tmax:
        return None
    return tmin, tmax


def iter_unimodular(bound: int):
    """All integer matrices (w, x; y, z) with |det| = 1 and entries in [-bound, bound].

    Rows are enumerated as coprime pairs (w, x); the second row then runs
    over the solution family of w*z - x*y = +-1.  Each matrix appears once.
    """
    for w in range(-bound, bound + 1):
        for x in range(-bound, bound + 1):
            if gcd(w, x) != 1:
                continue
            g, alpha, beta = _xgcd(w, x)  # alpha*w + beta*x == 1
            for eps in (1, -1):
                z0, y0 = alpha * eps, -beta * eps  # w*z0 - x*y0 == eps
                rz = _t_interval(z0, x, bound)
                ry = _t_interval(y0, w, bound)
                if rz is None or ry is None:
                    continue
                if x == 0 and w == 0:  # unreachable: gcd(0, 0) == 0
                    continue
                if x == 0:
                    tmin, tmax = ry
                elif w == 0:
                    tmin, tmax = rz
                else:
                    tmin, tmax = max(rz[0], ry[0]), min(rz[1], ry[1])
                for t in range(tmin, tmax + 1):
                    yield w, x, y0 + t * w, z0 + t * x


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        return -g, -x, -y
    return g, x, y


def _conjugated(a, c, b, d, w, x, y, z):
    """Entries of P*A*P^-1 in row-major order, P = (w, x; y, z)."""
    eps = w * z - x * y  # +-1, and P^-1 = eps * (z, -x; -y, w)
    r00 = w * a + x * b
    r01 = w * c + x * d
    r10 = y * a + z * b
    r11 = y * c + z * d
    return (
        eps * (r00 * z - r01 * y),
        eps * (r01 * w - r00 * x),
        eps * (r10 * z - r11 * y),
        eps * (r11 * w - r10 * x),
    )


def scan_conjugate_to(a, c, b, d, ta, tc, tb, td, bound):
    """First P in the box with P*(a,c;b,d)*P^-1 == (ta,tc;tb,td), else None."""
    for w, x, y, z in iter_unimodular(bound):
        m00, m01, m10, m11 = _conjugated(a, c, b, d, w, x, y, z)
        if m00 == ta and m01 == tc and m10 == tb and m11 == td:
            return w, x, y, z
    return None


def scan_meg_form(a, c, b, d, bound):
    """First P in the box taking (a,c;b,d) to the form (-1,0; n,-1), else None."""
    for w, x, y, z in iter_unimodular(bound):
        m00, m01, m10, m11 = _conjugated(a, c, b, d, w, x, y, z)
        if m00 == -1 and m01 == 0 and m11 == -1:
            return w, x, y, z
    return None
