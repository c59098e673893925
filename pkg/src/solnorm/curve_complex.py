"""Slopes on the torus and the intersection-number-2 curve complex.

A slope p/q (coprime, with 1/0 standing for infinity) names the isotopy
class of essential simple closed curves representing p*[lambda] + q*[mu] in
first homology.  Two slopes are joined by an edge when their geometric
intersection number |p*q' - p'*q| equals 2.  The resulting graph has three
connected components, indexed by the parities of (p, q); each component is
a tree, so geodesics are unique and breadth-first search is an exact oracle
for the closed-form distance N(p*q' - q*p', p'*s - q'*r).

GL(2, Z) acts on slopes through the matrix layout

    [[ a  c ]
     [ b  d ]]        p/q  |->  (a*p + c*q) / (b*p + d*q),

which matches the wire format "a,c;b,d" used by the command line.
"""

from __future__ import annotations

import enum
import math
from collections import deque
from dataclasses import dataclass

from .arith import INF, ExtNat, bredon_wood, ext_gcd
from .errors import DomainError, ParseError


@dataclass(frozen=True, order=True)
class Slope:
    """A reduced fraction p/q in canonical form: q > 0, or (p, q) = (1, 0)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"slope {self.p}/{self.q} is not reduced")
        if self.q < 0 or (self.q == 0 and self.p != 1):
            raise DomainError(f"slope {self.p}/{self.q} is not in canonical form")

    @classmethod
    def of(cls, p: int, q: int) -> "Slope":
        """Canonicalize the sign of a coprime pair; rejects non-coprime input."""
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a slope")
        if math.gcd(p, q) != 1:
            raise DomainError(f"slope {p}/{q} is not reduced")
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


def parse_slope(text: str) -> Slope:
    """Parse "p/q".  Malformed text raises ParseError; a non-coprime pair
    raises DomainError rather than being silently reduced."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ParseError(f"expected 'p/q', got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"expected 'p/q' with integer entries, got {text!r}") from None
    return Slope.of(p, q)


class ParityClass(enum.Enum):
    """The parity (p mod 2, q mod 2) of a slope; labels the three trees."""

    ONE_ZERO = (1, 0)
    ZERO_ONE = (0, 1)
    ONE_ONE = (1, 1)

    @property
    def j(self) -> int:
        return self.value[0]

    @property
    def k(self) -> int:
        return self.value[1]

    @property
    def base_vertex(self) -> Slope:
        """The representative slope j/k, used as the default orbit base point."""
        return Slope(self.j, self.k)

    @property
    def label(self) -> str:
        return f"{self.j}/{self.k}"

    @classmethod
    def from_bits(cls, j: int, k: int) -> "ParityClass":
        return cls((j, k))


def parity_of(s: Slope) -> ParityClass:
    return ParityClass((s.p % 2, s.q % 2))


@dataclass(frozen=True)
class GL2Matrix:
    """An integer matrix with rows (a, c) and (b, d) and determinant +-1."""

    a: int
    c: int
    b: int
    d: int

    def __post_init__(self) -> None:
        if self.det() not in (1, -1):
            raise DomainError(f"matrix {self.to_text()} has determinant {self.det()}, need +-1")
        # unimodularity makes each column a coprime pair
        assert math.gcd(self.a, self.b) == 1 and math.gcd(self.c, self.d) == 1

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def trace(self) -> int:
        return self.a + self.d

    def inverse(self) -> "GL2Matrix":
        e = self.det()
        return GL2Matrix(e * self.d, -e * self.c, -e * self.b, e * self.a)

    def __matmul__(self, other: "GL2Matrix") -> "GL2Matrix":
        return GL2Matrix(
            self.a * other.a + self.c * other.b,
            self.a * other.c + self.c * other.d,
            self.b * other.a + self.d * other.b,
            self.b * other.c + self.d * other.d,
        )

    def power(self, n: int) -> "GL2Matrix":
        if n < 0:
            return self.inverse().power(-n)
        result = IDENTITY
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def mod2(self) -> tuple[int, int, int, int]:
        return (self.a % 2, self.c % 2, self.b % 2, self.d % 2)

    def to_text(self) -> str:
        return f"{self.a},{self.c};{self.b},{self.d}"

    def __str__(self) -> str:
        return self.to_text()


IDENTITY = GL2Matrix(1, 0, 0, 1)


def parse_matrix(text: str) -> GL2Matrix:
    """Parse the row-major "a,c;b,d" format."""
    rows = text.strip().split(";")
    if len(rows) != 2:
        raise ParseError(f"expected 'a,c;b,d', got {text!r}")
    entries = []
    for row in rows:
        cells = row.split(",")
        if len(cells) != 2:
            raise ParseError(f"expected two entries per row, got {row!r}")
        for cell in cells:
            try:
                entries.append(int(cell))
            except ValueError:
                raise ParseError(f"expected integer entry, got {cell!r}") from None
    a, c, b, d = entries
    det = a * d - b * c
    if det not in (1, -1):
        raise DomainError(f"matrix {text!r} has determinant {det}, need +-1")
    return GL2Matrix(a, c, b, d)


def intersection_number(s1: Slope, s2: Slope) -> int:
    """Geometric intersection number |p1*q2 - p2*q1|."""
    return abs(s1.p * s2.q - s2.p * s1.q)


def mat_act(A: GL2Matrix, s: Slope) -> Slope:
    return Slope.of(A.a * s.p + A.c * s.q, A.b * s.p + A.d * s.q)


def distance(s1: Slope, s2: Slope) -> ExtNat:
    """Distance in the curve complex; infinite between different parity classes.

    Moving s1 to 0/1 by a unimodular matrix built from ext_gcd reduces the
    question to N of the image of s2.
    """
    g, x, y = ext_gcd(s1.p, s1.q)  # g == 1 for a reduced slope
    return bredon_wood(s1.p * s2.q - s1.q * s2.p, s2.p * x + s2.q * y)


def neighbors_bounded(s: Slope, bound: int) -> list[Slope]:
    """All slopes u with intersection_number(s, u) = 2 and |u.p|, |u.q| <= bound.

    The solutions of p*q' - p'*q = 2 form the family (p0 + t*p, q0 + t*q);
    members with both entries even are not slopes and are skipped.  The
    opposite family (intersection form value -2) consists of the negated
    pairs, which canonicalize to the same slopes.
    """
    if bound < 1:
        return []
    g, x, y = ext_gcd(s.p, s.q)
    p0, q0 = -2 * y, 2 * x  # s.p * q0 - p0 * s.q == 2
    ranges = []
    for base, step in ((p0, s.p), (q0, s.q)):
        if step == 0:
            if abs(base) > bound:
                return []
            continue
        lo, hi = -bound - base, bound - base
        if step < 0:
            lo, hi, step = -hi, -lo, -step
        ranges.append((-((-lo) // step), hi // step))
    tmin = max(r[0] for r in ranges)
    tmax = min(r[1] for r in ranges)
    found = []
    for t in range(tmin, tmax + 1):
        cp, cq = p0 + t * s.p, q0 + t * s.q
        if math.gcd(cp, cq) == 1:
            found.append(Slope.of(cp, cq))
    found.sort()
    return found


def distance_bfs(s1: Slope, s2: Slope, bound: int) -> ExtNat | str:
    """Breadth-first search over the subgraph with coefficients <= bound.

    Returns the exact distance when a path is found (any path in a tree
    contains the geodesic, so the shortest path in any subgraph is the
    geodesic), infinity on a parity mismatch, and the string "unknown" when
    the bounded search exhausts without reaching s2 -- absence within a
    bound proves nothing.
    """
    if parity_of(s1) != parity_of(s2):
        return INF
    if s1 == s2:
        return 0
    seen = {s1: 0}
    queue = deque([s1])
    while queue:
        cur = queue.popleft()
        level = seen[cur] + 1
        for nxt in neighbors_bounded(cur, bound):
            if nxt == s2:
                return level
            if nxt not in seen:
                seen[nxt] = level
                queue.append(nxt)
    return "unknown"


def geodesic(s1: Slope, s2: Slope) -> list[Slope]:
    """The unique tree path from s1 to s2.

    Each step enumerates the neighbor family of the current vertex by the
    parameter t (smallest |t| first) and moves to the unique neighbor whose
    distance to s2 drops by one; the search window is doubled on exhaustion.
    """
    dist = distance(s1, s2)
    if dist == INF:
        raise DomainError(f"infinite distance: {s1} and {s2} lie in different parity classes")
    path = [s1]
    cur = s1
    remaining = dist
    while remaining:
        cur = _step_toward(cur, s2, remaining - 1)
        path.append(cur)
        remaining -= 1
    return path


def _step_toward(cur: Slope, target: Slope, want: int) -> Slope:
    g, x, y = ext_gcd(cur.p, cur.q)
    p0, q0 = -2 * y, 2 * x
    window = 2 * max(1, abs(cur.p), abs(cur.q), abs(target.p), abs(target.q))
    while True:
        for t in _spiral(window):
            cp, cq = p0 + t * cur.p, q0 + t * cur.q
            if math.gcd(cp, cq) != 1:
                continue
            cand = Slope.of(cp, cq)
            if distance(cand, target) == want:
                return cand
        window *= 2


def _spiral(limit: int):
    yield 0
    for t in range(1, limit + 1):
        yield t
        yield -t


def export_dot(center: Slope, radius: int, bound: int) -> str:
    """DOT text for the ball of the given radius around center, restricted to
    coefficients <= bound.  Undirected edges are written once with "--"."""
    ball = {center: 0}
    frontier = [center]
    for level in range(1, radius + 1):
        nxt = []
        for v in frontier:
            for u in neighbors_bounded(v, bound):
                if u not in ball:
                    ball[u] = level
                    nxt.append(u)
        frontier = nxt
    nodes = sorted(ball)
    edges = set()
    for v in nodes:
        for u in neighbors_bounded(v, bound):
            if u in ball:
                edges.add((min(v, u), max(v, u)))
    lines = ["graph {"]
    for v in nodes:
        lines.append(f'  "{v}";')
    for v, u in sorted(edges):
        lines.append(f'  "{v}" -- "{u}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
