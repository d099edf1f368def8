"""JSON records printed by the command line.

Domain values stay frozen dataclasses; these converters turn them into
strings of the text grammar, so every printed entry parses back.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

from planelin.exactalg import (
    BlockMatPoly,
    Mat2,
    MatPoly2,
    format_unipoly,
)
from planelin.freefactor import TauWord
from planelin.linmap import CongruenceSubgroup
from planelin.matpoly import EWord
from planelin.planeaut import AffineAut, VdkWord

SCHEMA_VERSION = "planelin/1"

Rows = list[list[str]]


class Envelope(BaseModel):
    """Every JSON document the command line prints."""

    schema_version: str = Field(default=SCHEMA_VERSION, description="Output format version")
    verb: str = Field(description="The subcommand that produced the result")
    field: str = Field(description="Base field flag, q or fp:<p>")
    result: Any = Field(description="Verb-specific payload")


class VdkFactorRecord(BaseModel):
    kind: Literal["affine", "elementary"] = Field(description="Factor group of the factor")
    map: str = Field(description="The factor as an automorphism (f ; g)")


class VdkWordRecord(BaseModel):
    """A reduced word of the van der Kulk amalgam."""

    factors: list[VdkFactorRecord] = Field(description="Coset representatives, left to right")
    tail: str = Field(description="Trailing element of B")
    type_seq: list[int] = Field(description="1 for affine, 2 for elementary factors")


class LineFactorRecord(BaseModel):
    """A tau or E factor: a projective line and a polynomial in t."""

    delta: str = Field(description="The line, as (a:b)")
    f: str = Field(description="The polynomial of the factor")


class CongruenceRecord(BaseModel):
    modulus: int = Field(description="The modulus m")
    index: int = Field(description="Index of the congruence subgroup")
    generators: list[Rows] = Field(description="Schreier generators of the subgroup")
    coset_reps: list[Rows] = Field(description="Left coset representatives")


def matrix_rows(m: Mat2 | MatPoly2) -> Rows:
    """Nested entry strings of a constant or polynomial matrix."""
    if isinstance(m, Mat2):
        fmt = m.field.format
        return [[fmt(m.a), fmt(m.b)], [fmt(m.c), fmt(m.d)]]
    a, b, c, d = (format_unipoly(e) for e in m.entries)
    return [[a, b], [c, d]]


def block_rows(m: BlockMatPoly) -> Rows:
    """The full ``2k x 2k`` matrix as nested entry strings."""
    return [[format_unipoly(m.entry(i, j)) for j in range(m.size)] for i in range(m.size)]


def vdk_word_record(word: VdkWord) -> VdkWordRecord:
    factors = [
        VdkFactorRecord(
            kind="affine" if isinstance(r, AffineAut) else "elementary",
            map=str(r.to_polyaut()),
        )
        for r in word.factors
    ]
    return VdkWordRecord(
        factors=factors, tail=str(word.tail.to_polyaut()), type_seq=list(word.type_seq)
    )


def tau_word_record(word: TauWord) -> list[LineFactorRecord]:
    return [LineFactorRecord(delta=str(u.delta), f=format_unipoly(u.f)) for u in word.factors]


def e_word_record(word: EWord) -> list[LineFactorRecord]:
    return [LineFactorRecord(delta=str(e.delta), f=format_unipoly(e.f)) for e in word.factors]


def congruence_record(congruence: CongruenceSubgroup) -> CongruenceRecord:
    return CongruenceRecord(
        modulus=congruence.modulus,
        index=congruence.index,
        generators=[matrix_rows(g) for g in congruence.generators],
        coset_reps=[matrix_rows(r) for r in congruence.coset_reps],
    )
