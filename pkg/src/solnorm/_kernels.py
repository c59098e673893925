"""Kernel backend selection.

Imports the compiled extension when it is present (and not disabled via the
SOLNORM_PURE environment variable) and falls back to the pure-Python
implementations otherwise.  All arithmetic must stay exact, so the compiled
kernels are only used for inputs that provably fit in 64-bit intermediates;
anything larger is routed to the arbitrary-precision fallback.
"""

from __future__ import annotations

import os

from . import _fallback

_speedups = None
if not os.environ.get("SOLNORM_PURE"):
    try:
        from . import _speedups  # type: ignore[no-redef]
    except ImportError:
        _speedups = None

BACKEND = "compiled" if _speedups is not None else "pure"

# |p|, |q| below this never overflow in bw_halfsum: every intermediate is
# bounded by max(|p|, |q|).
_BW_LIMIT = 2**62
# Conjugation entries are bounded by 4 * bound**2 * max|A|; these caps keep
# that below 2**62.
_SCAN_BOUND_LIMIT = 2**12
_SCAN_ENTRY_LIMIT = 2**20


def backend() -> str:
    return BACKEND


def bw_halfsum(p: int, q: int) -> int:
    if _speedups is not None and abs(p) < _BW_LIMIT and abs(q) < _BW_LIMIT:
        return _speedups.bw_halfsum(p, q)
    return _fallback.bw_halfsum(p, q)


def _scan_fits(entries, bound: int) -> bool:
    return bound <= _SCAN_BOUND_LIMIT and all(abs(e) < _SCAN_ENTRY_LIMIT for e in entries)


def scan_conjugate_to(a, c, b, d, ta, tc, tb, td, bound):
    if _speedups is not None and _scan_fits((a, c, b, d, ta, tc, tb, td), bound):
        return _speedups.scan_conjugate_to(a, c, b, d, ta, tc, tb, td, bound)
    return _fallback.scan_conjugate_to(a, c, b, d, ta, tc, tb, td, bound)


def scan_meg_form(a, c, b, d, bound):
    if _speedups is not None and _scan_fits((a, c, b, d), bound):
        return _speedups.scan_meg_form(a, c, b, d, bound)
    return _fallback.scan_meg_form(a, c, b, d, bound)
