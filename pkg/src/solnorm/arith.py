"""Exact integer primitives: extended gcd, canonical continued fractions,
and the Bredon-Wood invariant N(p, q).

N(p, q) is the minimal genus of a non-orientable closed surface embeddable
in the lens space L(p, q) (Bredon & Wood, 1969).  It is infinite when p is
odd, zero when p = 0, and otherwise half the sum of a "b-sequence" derived
from the canonical continued fraction of |p|/|q|.  The same number is the
distance from 0/1 to p/q in the intersection-number-2 curve complex of the
torus, which is what the rest of the package uses it for.

All arithmetic is exact.  Distances, genera and translation lengths may be
infinite; infinity is represented by math.inf, which compares correctly
against Python ints.  Only comparisons and min() are ever applied to
possibly-infinite values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _kernels
from .errors import DomainError

INF = math.inf

# A natural number, or INF.
ExtNat = int | float


def is_finite(value: ExtNat) -> bool:
    return value != INF


def fmt_extnat(value: ExtNat) -> str:
    """Render an ExtNat for text output; infinity prints as "inf"."""
    return "inf" if value == INF else str(value)


def extnat_json(value: ExtNat):
    """JSON value for an ExtNat: an int, or the literal string "inf"."""
    return "inf" if value == INF else int(value)


def ext_gcd(p: int, q: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(|p|, |q|) > 0 and p*x + q*y = g.

    Raises DomainError on (0, 0), where the gcd is undefined.
    """
    if p == 0 and q == 0:
        raise DomainError("undefined gcd: both inputs are zero")
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = p, q
    while next_g:
        quot = g // next_g
        x, next_x = next_x, x - quot * next_x
        y, next_y = next_y, y - quot * next_y
        g, next_g = next_g, g - quot * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


@dataclass(frozen=True)
class ContinuedFraction:
    """Canonical continued fraction [a0, a1, ..., an] of a rational P/Q >= 0.

    Canonical means a0 >= 0, intermediate terms >= 1 and the last term >= 2,
    except for single-term expansions [a0].  With that normalization every
    nonnegative rational has exactly one expansion.
    """

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = self.terms
        if not terms:
            raise DomainError("empty continued fraction")
        if terms[0] < 0:
            raise DomainError(f"leading term must be >= 0, got {terms[0]}")
        if any(t < 1 for t in terms[1:-1]):
            raise DomainError(f"intermediate terms must be >= 1: {terms}")
        if len(terms) > 1 and terms[-1] < 2:
            raise DomainError(f"last term must be >= 2: {terms}")

    def value(self) -> Fraction:
        """Evaluate the fraction tower exactly."""
        acc = Fraction(self.terms[-1])
        for a in reversed(self.terms[:-1]):
            acc = a + 1 / acc
        return acc

    def __len__(self) -> int:
        return len(self.terms)


def continued_fraction(P: int, Q: int) -> ContinuedFraction:
    """Canonical continued fraction of P/Q for P >= 0, Q >= 1, gcd(P, Q) = 1.

    The plain Euclidean quotient sequence is already canonical: remainders
    strictly decrease, so a final quotient of 1 can only occur in the
    single-term case P/1.
    """
    if P < 0 or Q < 1:
        raise DomainError(f"need P >= 0 and Q >= 1, got {P}/{Q}")
    if math.gcd(P, Q) != 1:
        raise DomainError(f"{P}/{Q} is not in lowest terms")
    terms = []
    while Q:
        a, r = divmod(P, Q)
        terms.append(a)
        P, Q = Q, r
    return ContinuedFraction(tuple(terms))


def bredon_wood(p: int, q: int) -> ExtNat:
    """The Bredon-Wood invariant N(p, q).

    Conventions: N is infinite when p is odd, N(0, +-1) = 0, and N is
    insensitive to the signs of p and q.  Requires gcd(|p|, |q|) = 1 with
    gcd(k, 0) = |k|, so (+-1, 0) is legal (and gives infinity) while any
    even p with q = 0 is rejected.
    """
    if p == 0 and q == 0:
        raise DomainError("N(0, 0) is undefined")
    if math.gcd(p, q) != 1:
        raise DomainError(f"N({p}, {q}) needs coprime arguments")
    if p % 2 != 0:
        return INF
    if p == 0:
        return 0
    return _kernels.bw_halfsum(p, q)
