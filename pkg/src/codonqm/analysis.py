"""Spectral analysis of codon sequences.

Every codon basis state lives inside its amino acid's block and decomposes
over that block's eigenstates. The expectation of the block Hamiltonian in a
codon basis state is always the block's level energy (the diagonal is
constant), so synonymous sequences share their total expected energy exactly.
What distinguishes synonymous encodings is the shape of the decomposition:
the spectral weights, the variance (which equals the codon's coupling degree
times the squared coupling strength), and the range of eigenvalues the codon
actually touches.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .eigen import eigh
from .genetic_code import STANDARD_CODE, AminoAcid, Codon
from .hamiltonian import ModelParams, build_block

__all__ = [
    "CodonDecomposition",
    "CodonEnergyStats",
    "EncodingComparison",
    "InternalStopError",
    "PositionComparison",
    "SequenceEnergyReport",
    "compare_encodings",
    "decompose",
    "sequence_energy_report",
]

#: weights at or below this threshold count as unsupported eigenvalues
SUPPORT_TOL = 1e-12


class InternalStopError(ValueError):
    """A stop codon occurred before the final sequence position."""

    def __init__(self, codon: Codon, position: int):
        self.codon = codon
        self.position = position
        super().__init__(
            f"stop codon {codon} at position {position} is not final"
        )


@dataclass(frozen=True)
class CodonDecomposition:
    """Spectral weights of one codon basis state over its block eigenstates."""

    codon: Codon
    amino_acid: AminoAcid
    weights: tuple[tuple[float, float], ...]  # (eigenvalue, weight), ascending

    def support(self, tol: float = SUPPORT_TOL) -> tuple[float, ...]:
        """Eigenvalues carrying weight above ``tol``."""
        return tuple(ev for ev, w in self.weights if w > tol)

    def min_attainable(self, tol: float = SUPPORT_TOL) -> float:
        return min(self.support(tol))

    def max_attainable(self, tol: float = SUPPORT_TOL) -> float:
        return max(self.support(tol))

    def variance_about(self, energy: float) -> float:
        return float(sum(w * (ev - energy) ** 2 for ev, w in self.weights))


@lru_cache(maxsize=256)
def decompose(codon: Codon, params: ModelParams) -> CodonDecomposition:
    """Weights of a codon basis state over its block's eigenstates.

    Stop codons sit in 1x1 blocks and decompose trivially. Results are
    cached; both arguments are immutable.
    """
    aa = STANDARD_CODE.amino_acid_of(codon)
    block = build_block(aa, params)
    system = eigh(block.entries)
    row = block.index_of(codon)
    weights = tuple(
        (float(system.eigenvalues[k]), float(abs(system.eigenvectors[row, k]) ** 2))
        for k in range(system.n)
    )
    return CodonDecomposition(codon, aa, weights)


@dataclass(frozen=True)
class CodonEnergyStats:
    codon: Codon
    amino_acid: AminoAcid
    expectation: float
    variance: float
    min_attainable: float
    max_attainable: float
    weights: tuple[tuple[float, float], ...]


def _codon_stats(codon: Codon, params: ModelParams) -> CodonEnergyStats:
    deco = decompose(codon, params)
    energy = params.energy_of(deco.amino_acid)
    return CodonEnergyStats(
        codon=codon,
        amino_acid=deco.amino_acid,
        expectation=energy,
        variance=deco.variance_about(energy),
        min_attainable=deco.min_attainable(),
        max_attainable=deco.max_attainable(),
        weights=deco.weights,
    )


@dataclass(frozen=True)
class SequenceEnergyReport:
    """Per-codon spectral statistics plus sequence totals."""

    codons: tuple[Codon, ...]
    protein: tuple[AminoAcid, ...]
    per_codon: tuple[CodonEnergyStats, ...]
    expected_total: float
    variance_total: float
    min_total: float
    max_total: float

    def to_dict(self) -> dict:
        return {
            "codons": [c.bases for c in self.codons],
            "protein": [aa.code for aa in self.protein],
            "per_codon": [
                {
                    "codon": s.codon.bases,
                    "amino_acid": s.amino_acid.code,
                    "expectation": s.expectation,
                    "variance": s.variance,
                    "min_attainable": s.min_attainable,
                    "max_attainable": s.max_attainable,
                    "weights": [[ev, w] for ev, w in s.weights],
                }
                for s in self.per_codon
            ],
            "expected_total": self.expected_total,
            "variance_total": self.variance_total,
            "min_total": self.min_total,
            "max_total": self.max_total,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_rows(self) -> list[list[str]]:
        """Delimited-table form: one row per codon plus a totals row."""
        rows = [["codon", "amino_acid", "expectation", "variance", "min", "max"]]
        for s in self.per_codon:
            rows.append(
                [
                    s.codon.bases,
                    s.amino_acid.code,
                    repr(s.expectation),
                    repr(s.variance),
                    repr(s.min_attainable),
                    repr(s.max_attainable),
                ]
            )
        rows.append(
            [
                "TOTAL",
                "",
                repr(self.expected_total),
                repr(self.variance_total),
                repr(self.min_total),
                repr(self.max_total),
            ]
        )
        return rows

    def to_text(self) -> str:
        widths = [8, 10, 14, 12, 14, 14]
        lines = []
        for row in self.to_rows():
            lines.append("  ".join(f"{cell:<{w}}" for cell, w in zip(row, widths)).rstrip())
        return "\n".join(lines)


def sequence_energy_report(
    seq: Sequence[Codon], params: ModelParams
) -> SequenceEnergyReport:
    """Spectral statistics of a codon sequence.

    A stop codon is allowed only as the final element; anything earlier is
    rejected with its position.
    """
    codons = tuple(seq)
    if not codons:
        raise ValueError("empty codon sequence")
    for pos, codon in enumerate(codons[:-1], start=1):
        if STANDARD_CODE.amino_acid_of(codon).is_stop:
            raise InternalStopError(codon, pos)
    stats = tuple(_codon_stats(c, params) for c in codons)
    return SequenceEnergyReport(
        codons=codons,
        protein=tuple(s.amino_acid for s in stats),
        per_codon=stats,
        expected_total=sum(s.expectation for s in stats),
        variance_total=sum(s.variance for s in stats),
        min_total=sum(s.min_attainable for s in stats),
        max_total=sum(s.max_attainable for s in stats),
    )


@dataclass(frozen=True)
class PositionComparison:
    position: int
    codon_a: Codon
    codon_b: Codon
    amino_acid: AminoAcid
    same_codon: bool
    weights_a: tuple[tuple[float, float], ...]
    weights_b: tuple[tuple[float, float], ...]
    variance_a: float
    variance_b: float
    range_a: tuple[float, float]
    range_b: tuple[float, float]


@dataclass(frozen=True)
class EncodingComparison:
    """Side-by-side spectral comparison of two codon sequences.

    Positions are compared only when both sequences encode the same protein;
    expectation totals are equal in that case because block diagonals are
    constant.
    """

    same_protein: bool
    protein_a: tuple[AminoAcid, ...]
    protein_b: tuple[AminoAcid, ...]
    report_a: SequenceEnergyReport
    report_b: SequenceEnergyReport
    positions: tuple[PositionComparison, ...]

    @property
    def expected_totals_equal(self) -> bool:
        return self.report_a.expected_total == self.report_b.expected_total

    def to_dict(self) -> dict:
        return {
            "same_protein": self.same_protein,
            "protein_a": [aa.code for aa in self.protein_a],
            "protein_b": [aa.code for aa in self.protein_b],
            "expected_total_a": self.report_a.expected_total,
            "expected_total_b": self.report_b.expected_total,
            "expected_totals_equal": self.expected_totals_equal,
            "variance_total_a": self.report_a.variance_total,
            "variance_total_b": self.report_b.variance_total,
            "positions": [
                {
                    "position": p.position,
                    "codon_a": p.codon_a.bases,
                    "codon_b": p.codon_b.bases,
                    "amino_acid": p.amino_acid.code,
                    "same_codon": p.same_codon,
                    "weights_a": [[ev, w] for ev, w in p.weights_a],
                    "weights_b": [[ev, w] for ev, w in p.weights_b],
                    "variance_a": p.variance_a,
                    "variance_b": p.variance_b,
                    "range_a": list(p.range_a),
                    "range_b": list(p.range_b),
                }
                for p in self.positions
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [
            f"protein A: {'-'.join(aa.code for aa in self.protein_a)}",
            f"protein B: {'-'.join(aa.code for aa in self.protein_b)}",
            f"same protein: {'yes' if self.same_protein else 'no'}",
        ]
        if not self.same_protein:
            lines.append("spectral comparison skipped (different proteins)")
            return "\n".join(lines)
        lines.append(
            f"expected totals: {self.report_a.expected_total!r} == "
            f"{self.report_b.expected_total!r}"
        )
        lines.append(
            f"variance totals: {self.report_a.variance_total!r} vs "
            f"{self.report_b.variance_total!r}"
        )
        for p in self.positions:
            marker = "=" if p.same_codon else "!"
            lines.append(
                f"  [{p.position}] {p.codon_a.bases} {marker} {p.codon_b.bases}"
                f" ({p.amino_acid.code}): variance {p.variance_a!r} vs {p.variance_b!r},"
                f" range {p.range_a!r} vs {p.range_b!r}"
            )
        return "\n".join(lines)


def compare_encodings(
    s1: Iterable[Codon], s2: Iterable[Codon], params: ModelParams
) -> EncodingComparison:
    """Compare two codon sequences as encodings of a protein."""
    report_a = sequence_energy_report(tuple(s1), params)
    report_b = sequence_energy_report(tuple(s2), params)
    same = report_a.protein == report_b.protein
    positions: list[PositionComparison] = []
    if same:
        for k, (sa, sb) in enumerate(zip(report_a.per_codon, report_b.per_codon), 1):
            positions.append(
                PositionComparison(
                    position=k,
                    codon_a=sa.codon,
                    codon_b=sb.codon,
                    amino_acid=sa.amino_acid,
                    same_codon=sa.codon == sb.codon,
                    weights_a=sa.weights,
                    weights_b=sb.weights,
                    variance_a=sa.variance,
                    variance_b=sb.variance,
                    range_a=(sa.min_attainable, sa.max_attainable),
                    range_b=(sb.min_attainable, sb.max_attainable),
                )
            )
    return EncodingComparison(
        same_protein=same,
        protein_a=report_a.protein,
        protein_b=report_b.protein,
        report_a=report_a,
        report_b=report_b,
        positions=tuple(positions),
    )
