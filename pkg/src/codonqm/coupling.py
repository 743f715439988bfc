"""Coupling rules between codon basis states.

Two distinct codons carry a transition amplitude only when all of the
following hold:

* they encode the same amino acid (stop codons never couple);
* they differ in a contiguous run of one or two positions, i.e. the set of
  differing positions is one of {1}, {2}, {3}, {1,2}, {2,3}.

The amplitude has magnitude ``a``. Its phase is decided by the first two
hydrogen-bond sites of the differing nucleotides: identical donor/acceptor
patterns at every differing position give a purely imaginary amplitude,
fully interchanged patterns give a real one. The sign of the imaginary
amplitude is a convention: +i*a flows from the earlier codon to the later
codon of the block's canonical ordering, and the reverse direction takes the
conjugate, which keeps every block Hermitian.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .genetic_code import Codon, GeneticCode, Strand, StrandError, bond_pattern

__all__ = [
    "CouplingKind",
    "MixedBondPatternError",
    "compare_bond_patterns",
    "coupled",
    "coupling_amplitude",
    "coupling_kind",
    "differing_positions",
]

_CONTIGUOUS = ({1}, {2}, {3}, {1, 2}, {2, 3})


class CouplingKind(Enum):
    NONE = "none"
    REAL = "real"
    IMAGINARY_UP = "imaginary-up"
    IMAGINARY_DOWN = "imaginary-down"


class MixedBondPatternError(ValueError):
    """A multi-position difference mixes same-pattern and interchanged-pattern
    positions. The coupling rules leave this case undefined; it never occurs
    in the standard genetic code, so it is reported rather than resolved."""


def _require_rna(*codons: Codon) -> None:
    for codon in codons:
        if codon.strand is not Strand.RNA:
            raise StrandError(f"{codon} is a DNA codon; coupling rules act on RNA")


def differing_positions(c1: Codon, c2: Codon) -> frozenset[int]:
    """Positions (1-based) at which two same-strand codons differ."""
    if c1.strand is not c2.strand:
        raise StrandError(f"{c1} and {c2} are on different strand kinds")
    return frozenset(i for i in (1, 2, 3) if c1.bases[i - 1] != c2.bases[i - 1])


def coupled(c1: Codon, c2: Codon, code: GeneticCode) -> bool:
    """Whether two distinct codons carry a nonzero amplitude."""
    _require_rna(c1, c2)
    if c1 == c2:
        return False
    aa = code.amino_acid_of(c1)
    if aa is not code.amino_acid_of(c2) or aa.is_stop:
        return False
    return differing_positions(c1, c2) in _CONTIGUOUS


def compare_bond_patterns(c1: Codon, c2: Codon, positions: Iterable[int]) -> bool:
    """True if the first-two bond sites agree at every given position, False
    if they are interchanged at every position.

    Raises :class:`MixedBondPatternError` when the positions disagree on
    which relation holds.
    """
    same: list[bool] = []
    for pos in sorted(positions):
        p1 = bond_pattern(c1.bases[pos - 1])[:2]
        p2 = bond_pattern(c2.bases[pos - 1])[:2]
        same.append(p1 == p2)
    if all(same):
        return True
    if not any(same):
        return False
    raise MixedBondPatternError(
        f"{c1} vs {c2}: positions {sorted(positions)} mix same and interchanged"
        " bond patterns"
    )


def coupling_kind(c1: Codon, c2: Codon, code: GeneticCode) -> CouplingKind:
    """Classify the amplitude between two distinct codons."""
    if c1 == c2:
        raise ValueError("coupling is defined between distinct codons")
    if not coupled(c1, c2, code):
        return CouplingKind.NONE
    if compare_bond_patterns(c1, c2, differing_positions(c1, c2)):
        if code.position_in_block(c1) < code.position_in_block(c2):
            return CouplingKind.IMAGINARY_UP
        return CouplingKind.IMAGINARY_DOWN
    return CouplingKind.REAL


def coupling_amplitude(c1: Codon, c2: Codon, code: GeneticCode, a: float) -> complex:
    """Amplitude from ``c1`` to ``c2``: one of 0, ``a``, ``+i*a``, ``-i*a``."""
    kind = coupling_kind(c1, c2, code)
    if kind is CouplingKind.NONE:
        return 0j
    if kind is CouplingKind.REAL:
        return complex(a)
    return 1j * a if kind is CouplingKind.IMAGINARY_UP else -1j * a
