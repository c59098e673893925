"""Independent brute-force oracles and the randomized verification suites.

Everything here deliberately avoids the closed-form machinery it is checking:
distances are re-derived by breadth-first search over explicitly enumerated
neighbors, conjugacy is decided by scanning every unimodular matrix in a box,
and random matrices come from a seeded generator so every run is
reproducible.  The same checks back both the pytest suite and the
``solnorm verify`` subcommand.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from . import _kernels
from .arith import INF, bredon_wood, is_finite
from .bundle import (
    GeometryClass,
    classify_geometry,
    h2_structure,
    meg_bundle,
    mog_bundle,
    norm_multiset_bundle,
    order,
    periodic_class,
    PERIODIC_REPRESENTATIVES,
)
from .curve_complex import (
    GL2Matrix,
    IDENTITY,
    ParityClass,
    Slope,
    distance,
    geodesic,
    intersection_number,
    mat_act,
    neighbors_bounded,
    parity_of,
)
from .errors import DomainError
from .semibundle import meg_semi, mog_semi, norm_multiset_semi
from .tree_action import (
    parity_permutation,
    translation_length_closed,
    translation_length_orbit,
)

# Elementary shears, their inverses, and the orientation-reversing flip.
GENERATORS = (
    GL2Matrix(1, 1, 0, 1),
    GL2Matrix(1, -1, 0, 1),
    GL2Matrix(1, 0, 1, 1),
    GL2Matrix(1, 0, -1, 1),
    GL2Matrix(1, 0, 0, -1),
)


@dataclass(frozen=True)
class RandomMatrixSpec:
    """Deterministic recipe for a random word in the fixed generator set."""

    seed: int
    word_length: int


def random_glz(spec: RandomMatrixSpec) -> GL2Matrix:
    """Product of word_length generators chosen by a seeded RNG."""
    rng = random.Random(spec.seed)
    result = IDENTITY
    for _ in range(spec.word_length):
        result = result @ rng.choice(GENERATORS)
    return result


def random_matrix(rng: random.Random, max_word: int) -> GL2Matrix:
    return random_glz(RandomMatrixSpec(seed=rng.getrandbits(48), word_length=rng.randint(0, max_word)))


def random_slope(rng: random.Random, bound: int, parity: ParityClass | None = None) -> Slope:
    while True:
        p = rng.randint(-bound, bound)
        q = rng.randint(-bound, bound)
        if (p, q) == (0, 0) or math.gcd(p, q) != 1:
            continue
        if parity is not None and (p % 2, q % 2) != (parity.j, parity.k):
            continue
        return Slope.of(p, q)


def brute_conjugate(A: GL2Matrix, B: GL2Matrix, bound: int) -> GL2Matrix | None:
    """A matrix P with entries in [-bound, bound] and P A P^-1 = B, if one
    exists in the box; None is inconclusive, not a disproof."""
    if bound < 1:
        raise DomainError("conjugator bound must be >= 1")
    hit = _kernels.scan_conjugate_to(A.a, A.c, A.b, A.d, B.a, B.c, B.b, B.d, bound)
    if hit is None:
        return None
    w, x, y, z = hit
    return GL2Matrix(w, x, y, z)


def brute_conjugate_to_meg_form(A: GL2Matrix, bound: int) -> GL2Matrix | None:
    """A bounded P with P A P^-1 of the form (-1, 0; n, -1), if any."""
    if bound < 1:
        raise DomainError("conjugator bound must be >= 1")
    hit = _kernels.scan_meg_form(A.a, A.c, A.b, A.d, bound)
    if hit is None:
        return None
    w, x, y, z = hit
    return GL2Matrix(w, x, y, z)


def check_four_point(slopes: tuple[Slope, Slope, Slope, Slope]) -> bool:
    """Tree (0-hyperbolic) four-point condition: among the three pairings of
    distance sums, the two largest coincide."""
    w, x, y, z = slopes
    cls = parity_of(w)
    if any(parity_of(s) is not cls for s in (x, y, z)):
        raise DomainError("four-point condition needs four slopes in one parity class")
    sums = sorted(
        (
            distance(w, x) + distance(y, z),
            distance(w, y) + distance(x, z),
            distance(w, z) + distance(x, y),
        )
    )
    return sums[1] == sums[2]


def slopes_within(bound: int) -> list[Slope]:
    """All canonical slopes with |p| <= bound and |q| <= bound."""
    out = [Slope(1, 0)]
    for q in range(1, bound + 1):
        for p in range(-bound, bound + 1):
            if math.gcd(p, q) == 1:
                out.append(Slope(p, q))
    return out


# ----------------------------------------------------------------------
# Verification checks.  Each returns a CheckResult; the acceptance tests
# and the `verify` subcommand run them at their own scales.
# ----------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.detail}"


def check_grid_agreement(bound: int) -> CheckResult:
    """Formula distance vs breadth-first search, all same-parity pairs in the box."""
    slopes = slopes_within(bound)
    adjacency = {s: [u for u in neighbors_bounded(s, bound)] for s in slopes}
    pairs = 0
    failures: list[str] = []
    for source in slopes:
        level = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for u in adjacency[v]:
                    if u not in level:
                        level[u] = level[v] + 1
                        nxt.append(u)
            frontier = nxt
        for target, bfs_dist in level.items():
            pairs += 1
            if distance(source, target) != bfs_dist:
                failures.append(f"d({source},{target}) formula {distance(source, target)} != bfs {bfs_dist}")
    return CheckResult(
        "grid agreement",
        not failures,
        f"{pairs} BFS-reachable pairs within |p|,|q| <= {bound}, {len(failures)} mismatches",
        failures[:10],
    )


def check_bw_parity(max_p: int, per_p: int, seed: int) -> CheckResult:
    """N(p, q) = p/2 mod 2 for even p."""
    rng = random.Random(seed)
    checked = 0
    failures: list[str] = []
    for p in range(-max_p, max_p + 1, 2):
        if p == 0:
            continue
        for _ in range(per_p):
            q = rng.randint(1, 4 * max_p) * 2 - 1  # odd, hence coprime candidates
            while math.gcd(p, q) != 1:
                q += 2
            checked += 1
            value = bredon_wood(p, q)
            if value % 2 != (abs(p) // 2) % 2:
                failures.append(f"N({p},{q}) = {value}")
    return CheckResult(
        "Bredon-Wood parity",
        not failures,
        f"{checked} pairs with |p| <= {max_p}, {len(failures)} parity violations",
        failures[:10],
    )


def check_lens_invariance(max_p: int) -> CheckResult:
    """N(p, q) is unchanged by q -> q + p, q -> -q, and q -> q^-1 mod p."""
    checked = 0
    failures: list[str] = []
    for p in range(2, max_p + 1, 2):
        for q in range(1, p):
            if math.gcd(p, q) != 1:
                continue
            checked += 1
            base = bredon_wood(p, q)
            qinv = pow(q, -1, p)
            for other in (bredon_wood(p, q + p), bredon_wood(p, -q), bredon_wood(p, qinv)):
                if other != base:
                    failures.append(f"N({p},{q}) = {base} but a lens-equivalent q gave {other}")
    return CheckResult(
        "lens invariance",
        not failures,
        f"{checked} (p, q) with even p <= {max_p}, {len(failures)} violations",
        failures[:10],
    )


def check_closed_vs_orbit(n_matrices: int, max_word: int, alt_vertices: int, seed: int) -> CheckResult:
    """Closed-form translation lengths against the orbit computation, at the
    default base vertex and at random alternative vertices."""
    rng = random.Random(seed)
    failures: list[str] = []
    comparisons = 0
    for i in range(n_matrices):
        A = random_glz(RandomMatrixSpec(seed=seed + i, word_length=i % (max_word + 1)))
        for cls in ParityClass:
            closed = translation_length_closed(A, cls)
            data = translation_length_orbit(A, cls, compute_witness=False)
            comparisons += 1
            if closed != data.length:
                failures.append(f"{A} on {cls.label}: closed {closed} != orbit {data.length}")
                continue
            if not is_finite(closed):
                continue
            for _ in range(alt_vertices):
                v = random_slope(rng, 30, parity=cls)
                alt = translation_length_orbit(A, cls, v, compute_witness=False)
                comparisons += 1
                if alt.length != closed:
                    failures.append(f"{A} on {cls.label} at {v}: orbit {alt.length} != {closed}")
    return CheckResult(
        "closed form vs orbit",
        not failures,
        f"{comparisons} comparisons over {n_matrices} matrices, {len(failures)} mismatches",
        failures[:10],
    )


def check_periodic_table() -> CheckResult:
    """The seven periodic conjugacy classes: self-classification, meg, mog."""
    meg_two = {"A2", "A3", "A4"}
    mog_three = {"A3", "A6"}
    failures: list[str] = []
    for name, A in PERIODIC_REPRESENTATIVES.items():
        if periodic_class(A) != name:
            failures.append(f"{name} classified as {periodic_class(A)}")
        expect_meg = 2 if name in meg_two else 4
        if meg_bundle(A) != expect_meg:
            failures.append(f"meg({name}) = {meg_bundle(A)}, expected {expect_meg}")
        expect_mog = 3 if name in mog_three else INF
        if mog_bundle(A) != expect_mog:
            failures.append(f"mog({name}) = {mog_bundle(A)}, expected {expect_mog}")
        if classify_geometry(A) is not GeometryClass.EUCLIDEAN_PERIODIC:
            failures.append(f"{name} not classified periodic")
    return CheckResult(
        "periodic table", not failures, f"7 classes checked, {len(failures)} errors", failures
    )


def check_nil_family(max_n: int) -> CheckResult:
    """Shear bundles (1,0; n,1) and (-1,0; n,-1): meg 4 resp. 2; mog is
    n/2 + 2 when n = 2 mod 4 and infinite otherwise."""
    failures: list[str] = []
    for n in range(1, max_n + 1):
        expect_mog = n // 2 + 2 if n % 4 == 2 else INF
        plus = GL2Matrix(1, 0, n, 1)
        minus = GL2Matrix(-1, 0, n, -1)
        if meg_bundle(plus) != 4:
            failures.append(f"meg(1,0;{n},1) = {meg_bundle(plus)}")
        if meg_bundle(minus) != 2:
            failures.append(f"meg(-1,0;{n},-1) = {meg_bundle(minus)}")
        for A in (plus, minus):
            if mog_bundle(A) != expect_mog:
                failures.append(f"mog({A}) = {mog_bundle(A)}, expected {expect_mog}")
    return CheckResult(
        "Nil family", not failures, f"n = 1..{max_n}, {len(failures)} errors", failures[:10]
    )


def check_semibundle(samples: int, seed: int) -> CheckResult:
    """Semi-bundle theorems on random gluings: meg always 2, all norms zero
    for odd or zero b, odd norm N(b, a) and mog = N(b, a) + 2 for b = 2 mod 4."""
    failures: list[str] = []
    for i in range(samples):
        A = random_glz(RandomMatrixSpec(seed=seed + i, word_length=i % 13))
        if meg_semi(A) != 2:
            failures.append(f"meg({A}) != 2")
        norms = norm_multiset_semi(A)
        if A.b % 2 == 1 or A.b == 0:
            if any(norms):
                failures.append(f"{A}: b = {A.b} but norms {norms}")
            if A.b % 2 == 1 and len(norms) != 4:
                failures.append(f"{A}: b odd but {len(norms)} classes")
            continue
        value = bredon_wood(A.b, A.a)
        if norms != sorted([0, 0, 0, 0, value, value, value, value]):
            failures.append(f"{A}: norms {norms}")
        if A.b % 4 == 2:
            if value % 2 != 1:
                failures.append(f"{A}: N({A.b},{A.a}) = {value} not odd")
            if mog_semi(A) != value + 2:
                failures.append(f"mog({A}) = {mog_semi(A)} != {value + 2}")
        else:
            if value % 2 != 0:
                failures.append(f"{A}: N({A.b},{A.a}) = {value} not even")
            if mog_semi(A) != INF:
                failures.append(f"mog({A}) = {mog_semi(A)} != inf")
    return CheckResult(
        "semi-bundle theorems", not failures, f"{samples} gluings, {len(failures)} errors",
        failures[:10],
    )


def iter_trace_minus_two(entry_bound: int):
    """All matrices with det 1, trace -2 and entries in [-entry_bound, entry_bound]."""
    for a in range(-entry_bound, entry_bound + 1):
        d = -2 - a
        if abs(d) > entry_bound:
            continue
        target = a * d - 1  # b*c for det 1
        for b in range(-entry_bound, entry_bound + 1):
            if b == 0:
                if target == 0:
                    for c in range(-entry_bound, entry_bound + 1):
                        yield GL2Matrix(a, c, 0, d)
                continue
            if target % b == 0 and abs(target // b) <= entry_bound:
                yield GL2Matrix(a, target // b, b, d)


def check_conjugacy_criterion(
    entry_bound: int, conj_bound: int, negatives: int, seed: int
) -> CheckResult:
    """The algebraic meg test (det 1, trace -2) against brute-force search:
    every such matrix is conjugated into the form (-1, 0; n, -1) by a bounded
    P, and no matrix of a different trace ever is."""
    failures: list[str] = []
    positives = 0
    for A in iter_trace_minus_two(entry_bound):
        positives += 1
        P = brute_conjugate_to_meg_form(A, conj_bound)
        if P is None:
            failures.append(f"no conjugator (bound {conj_bound}) for {A}")
            continue
        M = P @ A @ P.inverse()
        if not (M.a == -1 and M.c == 0 and M.d == -1):
            failures.append(f"conjugator for {A} gave {M}")
    rng = random.Random(seed)
    tested = 0
    while tested < negatives:
        A = random_matrix(rng, 12)
        if A.det() != 1 or A.trace() == -2:
            continue
        tested += 1
        P = brute_conjugate_to_meg_form(A, conj_bound)
        if P is not None:
            failures.append(f"trace {A.trace()} matrix {A} reached the form via {P}")
    return CheckResult(
        "conjugacy criterion",
        not failures,
        f"{positives} trace -2 matrices (entries <= {entry_bound}) conjugated, "
        f"{tested} other-trace matrices never reached the form; {len(failures)} errors",
        failures[:10],
    )


def check_geodesics(samples: int, coeff_bound: int, seed: int) -> CheckResult:
    """Geodesic soundness: right endpoints, length = distance, and successive
    intersection numbers all equal to 2."""
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(samples):
        cls = rng.choice(list(ParityClass))
        s1 = random_slope(rng, coeff_bound, parity=cls)
        s2 = random_slope(rng, coeff_bound, parity=cls)
        path = geodesic(s1, s2)
        if path[0] != s1 or path[-1] != s2:
            failures.append(f"{s1}->{s2}: endpoints {path[0]}, {path[-1]}")
        if len(path) - 1 != distance(s1, s2):
            failures.append(f"{s1}->{s2}: length {len(path) - 1} != {distance(s1, s2)}")
        if any(intersection_number(path[i], path[i + 1]) != 2 for i in range(len(path) - 1)):
            failures.append(f"{s1}->{s2}: non-edge step")
    return CheckResult(
        "geodesic soundness",
        not failures,
        f"{samples} same-parity pairs with |p|,|q| <= {coeff_bound}, {len(failures)} errors",
        failures[:10],
    )


def check_invariance(matrix_pairs: int, slope_tuples: int, seed: int) -> CheckResult:
    """Conjugation and inverse invariance of the norm data, isometry of the
    action, and the four-point condition."""
    rng = random.Random(seed)
    failures: list[str] = []
    for _ in range(matrix_pairs):
        A = random_matrix(rng, 10)
        P = random_matrix(rng, 8)
        conj = P @ A @ P.inverse()
        for other, label in ((conj, "conjugate"), (A.inverse(), "inverse")):
            if norm_multiset_bundle(A) != norm_multiset_bundle(other):
                failures.append(f"{label} norm multiset differs for {A}")
            if mog_bundle(A) != mog_bundle(other) or meg_bundle(A) != meg_bundle(other):
                failures.append(f"{label} mog/meg differs for {A}")
            if classify_geometry(A) is not classify_geometry(other) or order(A) != order(other):
                failures.append(f"{label} geometry/order differs for {A}")
        # semi-bundle data sees only the first column, so conjugation can
        # change it; inversion cannot (d = +-1/a mod b, a lens equivalence)
        inv = A.inverse()
        if norm_multiset_semi(A) != norm_multiset_semi(inv) or mog_semi(A) != mog_semi(inv):
            failures.append(f"inverse semi data differs for {A}")
        perm = parity_permutation(P)
        for cls in ParityClass:
            if translation_length_closed(A, cls) != translation_length_closed(conj, perm[cls]):
                failures.append(f"conjugation does not permute lengths for {A} on {cls.label}")
    for _ in range(slope_tuples):
        cls = rng.choice(list(ParityClass))
        quad = tuple(random_slope(rng, 25, parity=cls) for _ in range(4))
        if not check_four_point(quad):
            failures.append(f"four-point fails on {quad}")
        A = random_matrix(rng, 10)
        u, v = quad[0], quad[1]
        if distance(mat_act(A, u), mat_act(A, v)) != distance(u, v):
            failures.append(f"{A} is not an isometry on ({u}, {v})")
        if intersection_number(mat_act(A, u), mat_act(A, v)) != intersection_number(u, v):
            failures.append(f"{A} changes intersection number on ({u}, {v})")
    return CheckResult(
        "invariance suite",
        not failures,
        f"{matrix_pairs} matrix pairs and {slope_tuples} slope tuples, {len(failures)} errors",
        failures[:10],
    )


def check_h2_kernel(samples: int, seed: int) -> CheckResult:
    """The case table for H_2 against the kernel of the mod-2 relations
    k = a*k + b*j, j = c*k + d*j."""
    failures: list[str] = []
    for i in range(samples):
        A = random_glz(RandomMatrixSpec(seed=seed + i, word_length=i % 11))
        expected = {
            (j, k)
            for j in (0, 1)
            for k in (0, 1)
            if k == (A.a * k + A.b * j) % 2 and j == (A.c * k + A.d * j) % 2
        }
        if h2_structure(A).valid_jk != expected:
            failures.append(f"{A}: table {sorted(h2_structure(A).valid_jk)} != kernel {sorted(expected)}")
    return CheckResult(
        "H2 kernel cross-check", not failures, f"{samples} matrices, {len(failures)} errors",
        failures[:10],
    )


QUICK_CHECKS = [
    lambda: check_grid_agreement(10),
    lambda: check_bw_parity(200, 4, seed=101),
    lambda: check_lens_invariance(60),
    lambda: check_closed_vs_orbit(150, 12, 2, seed=102),
    check_periodic_table,
    lambda: check_nil_family(16),
    lambda: check_semibundle(120, seed=103),
    lambda: check_conjugacy_criterion(8, 14, 60, seed=104),
    lambda: check_geodesics(100, 25, seed=105),
    lambda: check_invariance(100, 200, seed=106),
    lambda: check_h2_kernel(200, seed=107),
]

FULL_CHECKS = [
    lambda: check_grid_agreement(25),
    lambda: check_bw_parity(1000, 10, seed=101),
    lambda: check_lens_invariance(200),
    lambda: check_closed_vs_orbit(1000, 12, 5, seed=102),
    check_periodic_table,
    lambda: check_nil_family(48),
    lambda: check_semibundle(500, seed=103),
    lambda: check_conjugacy_criterion(20, 30, 500, seed=104),
    lambda: check_geodesics(500, 40, seed=105),
    lambda: check_invariance(500, 1000, seed=106),
    lambda: check_h2_kernel(500, seed=107),
]


def run_checks(level: str) -> list[CheckResult]:
    checks = {"quick": QUICK_CHECKS, "full": FULL_CHECKS}[level]
    return [check() for check in checks]
