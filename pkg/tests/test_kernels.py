"""Compiled kernels against the pure-Python reference implementations."""

import math
import random

import pytest

from solnorm import _fallback, _kernels

speedups = pytest.importorskip("solnorm._speedups") if _kernels.BACKEND == "compiled" else None
needs_ext = pytest.mark.skipif(speedups is None, reason="compiled extension not built")


def test_fallback_unimodular_enumeration_is_complete():
    bound = 3
    enumerated = set(_fallback.iter_unimodular(bound))
    brute = {
        (w, x, y, z)
        for w in range(-bound, bound + 1)
        for x in range(-bound, bound + 1)
        for y in range(-bound, bound + 1)
        for z in range(-bound, bound + 1)
        if w * z - x * y in (1, -1)
    }
    assert enumerated == brute
    assert len(enumerated) == len(list(_fallback.iter_unimodular(bound)))


@needs_ext
def test_bw_halfsum_agrees_on_grid():
    for p in range(2, 300, 2):
        for q in range(1, 120):
            if math.gcd(p, q) != 1:
                continue
            assert speedups.bw_halfsum(p, q) == _fallback.bw_halfsum(p, q)
            assert speedups.bw_halfsum(-p, -q) == _fallback.bw_halfsum(p, q)


@needs_ext
def test_bw_halfsum_agrees_on_randoms():
    rng = random.Random(42)
    for _ in range(2000):
        p = 2 * rng.randint(1, 10**9)
        q = rng.randint(1, 10**9)
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if p % 2 != 0 or p == 0:
            continue
        assert speedups.bw_halfsum(p, q) == _fallback.bw_halfsum(p, q)


@needs_ext
def test_scans_agree():
    rng = random.Random(99)
    cases = []
    for _ in range(40):
        entries = [rng.randint(-4, 4) for _ in range(4)]
        a, c, b, d = entries
        if a * d - b * c not in (1, -1):
            continue
        cases.append((a, c, b, d))
    cases.extend([(1, 0, 2, 1), (-1, 0, 3, -1), (0, 1, 1, 0), (2, 1, 1, 1)])
    for a, c, b, d in cases:
        fast = speedups.scan_meg_form(a, c, b, d, 4)
        slow = _fallback.scan_meg_form(a, c, b, d, 4)
        assert (fast is None) == (slow is None)
        for a2, c2, b2, d2 in cases[:8]:
            fast = speedups.scan_conjugate_to(a, c, b, d, a2, c2, b2, d2, 3)
            slow = _fallback.scan_conjugate_to(a, c, b, d, a2, c2, b2, d2, 3)
            assert (fast is None) == (slow is None)


def test_dispatcher_routes_big_inputs_to_pure():
    # over the 64-bit window the dispatcher must still give exact answers
    p = 2 * 7**80
    q = 7**80 + 2
    assert math.gcd(p, q) == 1
    assert _kernels.bw_halfsum(p, q) == _fallback.bw_halfsum(p, q)
