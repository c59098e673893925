"""Realizing-surface descriptions and per-class norm reports.

A norm table entry pairs a homology class with its norm and a combinatorial
description of a surface realizing it.  Non-orientable realizers of positive
norm carry a geodesic certificate: the path of slopes whose successive
intersection numbers are 2, from which the surface is assembled one piece
per edge.  Certificates longer than a caller-chosen cap are elided from
reports but the genus is still recorded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve_complex import Slope

KIND_EMPTY = "empty"
KIND_TORUS_FIBER = "torus fiber"
KIND_TORUS = "torus"
KIND_KLEIN_BOTTLE = "Klein bottle"
KIND_PI = "Pi_g"
KIND_SUM = "sum"


@dataclass(frozen=True)
class SurfaceDescription:
    kind: str
    genus: int | None = None
    certificate: tuple[Slope, ...] | None = None
    certificate_elided: bool = False
    pieces: tuple["SurfaceDescription", ...] = ()

    def norm_contribution(self) -> int:
        """max(0, -Euler characteristic): genus - 2 for a non-orientable
        surface of genus > 2, zero for everything else here."""
        if self.kind == KIND_SUM:
            return sum(piece.norm_contribution() for piece in self.pieces)
        if self.kind == KIND_PI:
            assert self.genus is not None
            return max(0, self.genus - 2)
        return 0

    def describe(self) -> str:
        if self.kind == KIND_SUM:
            return " + ".join(piece.describe() for piece in self.pieces)
        if self.kind == KIND_PI:
            return f"Pi_{self.genus}"
        if self.kind == KIND_EMPTY:
            return "empty surface"
        return self.kind

    def certificate_text(self) -> str | None:
        texts = []
        for desc in (self,) + self.pieces:
            if desc.certificate_elided:
                texts.append("(elided)")
            elif desc.certificate:
                texts.append(" -> ".join(str(s) for s in desc.certificate))
        return "; ".join(texts) if texts else None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.kind}
        if self.genus is not None:
            doc["genus"] = self.genus
        if self.certificate_elided:
            doc["certificate"] = "elided"
        elif self.certificate is not None:
            doc["certificate"] = [str(s) for s in self.certificate]
        if self.pieces:
            doc["pieces"] = [piece.to_json() for piece in self.pieces]
        return doc


@dataclass(frozen=True)
class NormReport:
    coords: dict
    norm: int
    realizer: SurfaceDescription
    note: str | None = None

    def to_json(self) -> dict:
        doc = {"class": dict(self.coords), "norm": self.norm, "realizer": self.realizer.to_json()}
        if self.note:
            doc["note"] = self.note
        return doc


def pi_surface(certificate: list[Slope]) -> SurfaceDescription:
    """Non-orientable surface built along a geodesic: genus = path length + 2."""
    genus = len(certificate) - 1 + 2
    return SurfaceDescription(KIND_PI, genus=genus, certificate=tuple(certificate))


def pi_surface_elided(genus: int) -> SurfaceDescription:
    """Same, for certificates over the length cap: genus only, path elided."""
    return SurfaceDescription(KIND_PI, genus=genus, certificate_elided=True)


EMPTY_SURFACE = SurfaceDescription(KIND_EMPTY)
TORUS_FIBER = SurfaceDescription(KIND_TORUS_FIBER)
TORUS = SurfaceDescription(KIND_TORUS)
KLEIN_BOTTLE = SurfaceDescription(KIND_KLEIN_BOTTLE, genus=2)


def sum_of(*pieces: SurfaceDescription) -> SurfaceDescription:
    return SurfaceDescription(KIND_SUM, pieces=tuple(pieces))
