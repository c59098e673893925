"""Torus bundles over the circle: Z2-homology, Z2-Thurston norms, minimum
odd/even non-orientable genus, and the geometry of the mapping torus.

For the mapping torus of a torus map with matrix A, H_2 with Z2 coefficients
is read off A mod 2.  It always contains the fiber class tau (norm 0); each
parity class j/k preserved by A mod 2 contributes a generator F[j/k] whose
norm is the translation length of A on the tree of that class, realized by
a torus or Klein bottle when the length is 0 and by a non-orientable surface
of genus length + 2 otherwise.  Adding tau never changes the norm.

There are five cases of A mod 2: the identity (all three classes preserved,
group of order 8), three transpositions (one class preserved, order 4), and
two 3-cycles (none preserved, order 2).  In the identity case the class
pairing with both basis curves is the sum F[0/1] + F[1/0]; its norm entries
are tagged "derived identification" since that sum is identified with
F[1/1] through the intersection pairing rather than by a stated equation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .arith import INF, ExtNat, is_finite
from .curve_complex import IDENTITY, GL2Matrix, ParityClass, geodesic, mat_act
from .errors import DomainError
from .reports import (
    EMPTY_SURFACE,
    KLEIN_BOTTLE,
    TORUS,
    TORUS_FIBER,
    NormReport,
    SurfaceDescription,
    pi_surface,
    pi_surface_elided,
    sum_of,
)
from .tree_action import (
    parity_permutation,
    translation_length_closed,
    translation_length_orbit,
    translation_lengths,
)

DEFAULT_CERTIFICATE_CAP = 10000

DERIVED_IDENTIFICATION = "derived identification"


@dataclass(frozen=True)
class BundleClass:
    """Coordinates of a Z2-homology class: t is the tau coefficient, and
    (j, k) are the pairings with the basis curves (j with gamma_mu, k with
    gamma_lambda)."""

    t: int
    j: int
    k: int

    def __post_init__(self) -> None:
        if not all(bit in (0, 1) for bit in (self.t, self.j, self.k)):
            raise DomainError(f"class coordinates must be bits: {(self.t, self.j, self.k)}")

    def parity(self) -> ParityClass | None:
        if (self.j, self.k) == (0, 0):
            return None
        return ParityClass.from_bits(self.j, self.k)


@dataclass(frozen=True)
class H2Structure:
    case_label: str
    valid_jk: frozenset[tuple[int, int]]
    generators: tuple[str, ...]
    identification: str | None = None

    @property
    def order(self) -> int:
        return 2 * len(self.valid_jk)


def h2_structure(A: GL2Matrix) -> H2Structure:
    """The five-case table keyed on A mod 2."""
    perm = parity_permutation(A)
    fixed = [cls for cls in ParityClass if perm[cls] is cls]
    if len(fixed) == 3:
        return H2Structure(
            case_label="identity",
            valid_jk=frozenset({(0, 0), (0, 1), (1, 0), (1, 1)}),
            generators=("tau", "F[0/1]", "F[1/0]"),
            identification="F[1/1] = F[0/1] + F[1/0]",
        )
    if len(fixed) == 1:
        cls = fixed[0]
        return H2Structure(
            case_label=f"fixes {cls.label}",
            valid_jk=frozenset({(0, 0), (cls.j, cls.k)}),
            generators=("tau", f"F[{cls.label}]"),
        )
    # a 3-cycle fixes nothing; a transposition always fixes exactly one class
    assert not fixed
    return H2Structure(case_label="3-cycle", valid_jk=frozenset({(0, 0)}), generators=("tau",))


def z2_norm_bundle(A: GL2Matrix, cls: BundleClass) -> int:
    """Z2-Thurston norm of the class: 0 for 0 and tau, else the translation
    length on the tree of (j, k), which is finite on every valid class."""
    structure = h2_structure(A)
    if (cls.j, cls.k) not in structure.valid_jk:
        valid = sorted(structure.valid_jk)
        raise DomainError(
            f"class (j, k) = {(cls.j, cls.k)} does not exist in H2 for {A}; valid: {valid}"
        )
    parity = cls.parity()
    if parity is None:
        return 0
    length = translation_length_closed(A, parity)
    assert is_finite(length)
    return int(length)


def _realizer(A: GL2Matrix, parity: ParityClass, cap: int) -> SurfaceDescription:
    """Surface realizing F[j/k]: an invariant-curve torus or Klein bottle for
    a rotation, else a non-orientable surface along the witness geodesic."""
    length = translation_length_closed(A, parity)
    assert is_finite(length)
    if length > max(cap, 0):
        # skip the witness search entirely; only the genus is reported
        return pi_surface_elided(int(length) + 2)
    data = translation_length_orbit(A, parity)
    assert data.witness is not None and data.length == length
    if length == 0:
        w = data.witness
        image = (A.a * w.p + A.c * w.q, A.b * w.p + A.d * w.q)
        return TORUS if image == (w.p, w.q) else KLEIN_BOTTLE
    return pi_surface(geodesic(data.witness, mat_act(A, data.witness)))


def norm_table_bundle(
    A: GL2Matrix, certificate_cap: int = DEFAULT_CERTIFICATE_CAP
) -> list[NormReport]:
    """One entry per element of H_2, in (t, j, k) order."""
    structure = h2_structure(A)
    realizers = {}
    for j, k in sorted(structure.valid_jk - {(0, 0)}):
        realizers[(j, k)] = _realizer(A, ParityClass.from_bits(j, k), certificate_cap)
    table = []
    derived = structure.identification is not None
    for t in (0, 1):
        for j, k in sorted(structure.valid_jk):
            cls = BundleClass(t, j, k)
            norm = z2_norm_bundle(A, cls)
            if (j, k) == (0, 0):
                surface = TORUS_FIBER if t else EMPTY_SURFACE
            elif t:
                surface = sum_of(realizers[(j, k)], TORUS_FIBER)
            else:
                surface = realizers[(j, k)]
            note = DERIVED_IDENTIFICATION if derived and (j, k) == (1, 1) else None
            table.append(
                NormReport(coords={"t": t, "j": j, "k": k}, norm=norm, realizer=surface, note=note)
            )
    return table


def norm_multiset_bundle(A: GL2Matrix) -> list[int]:
    """Sorted norms of all elements of H_2, without building realizers."""
    structure = h2_structure(A)
    norms = []
    for j, k in structure.valid_jk:
        if (j, k) == (0, 0):
            value = 0
        else:
            value = int(translation_length_closed(A, ParityClass.from_bits(j, k)))
        norms.extend((value, value))  # the class and its tau-translate
    return sorted(norms)


def mog_bundle(A: GL2Matrix) -> ExtNat:
    """Minimum odd genus of an embeddable non-orientable closed surface:
    2 + the smallest odd translation length, or infinity if none is odd."""
    odd = [l for l in translation_lengths(A).values() if is_finite(l) and l % 2 == 1]
    if not odd:
        return INF
    return 2 + min(odd)


def meg_bundle(A: GL2Matrix) -> int:
    """Minimum even genus: 2 when the bundle is non-orientable (det -1) or
    the monodromy is conjugate to (-1,0; n,-1) -- equivalently det 1 and
    trace -2 -- else 4."""
    if A.det() == -1:
        return 2
    if A.trace() == -2:
        return 2
    return 4


class GeometryClass(enum.Enum):
    EUCLIDEAN_PERIODIC = "Euclidean-periodic"
    NIL = "Nil"
    SOL_ANOSOV = "Sol-Anosov"


def order(A: GL2Matrix) -> ExtNat:
    """Multiplicative order; finite orders in GL(2, Z) are 1, 2, 3, 4, 6."""
    for k in (1, 2, 3, 4, 6):
        if A.power(k) == IDENTITY:
            return k
    return INF


def classify_geometry(A: GL2Matrix) -> GeometryClass:
    if is_finite(order(A)):
        return GeometryClass.EUCLIDEAN_PERIODIC
    if A.det() == 1 and abs(A.trace()) == 2:
        return GeometryClass.NIL
    return GeometryClass.SOL_ANOSOV


PERIODIC_REPRESENTATIVES = {
    "A1": GL2Matrix(1, 0, 0, 1),
    "A2": GL2Matrix(-1, 0, 0, -1),
    "A3": GL2Matrix(1, 0, 0, -1),
    "A4": GL2Matrix(1, 0, 1, -1),
    "A5": GL2Matrix(0, 1, -1, -1),
    "A6": GL2Matrix(0, -1, 1, 0),
    "A7": GL2Matrix(0, 1, -1, 1),
}


def periodic_class(A: GL2Matrix) -> str | None:
    """Conjugacy class among the seven periodic matrices, or None.

    (order, det) separates everything except A3 from A4, which share order
    2, det -1 and trace 0; those differ by whether A is the identity mod 2.
    """
    k = order(A)
    if not is_finite(k):
        return None
    if k == 1:
        return "A1"
    if k == 2:
        if A.det() == 1:
            return "A2"
        return "A3" if A.mod2() == (1, 0, 0, 1) else "A4"
    return {3: "A5", 4: "A6", 6: "A7"}[k]
