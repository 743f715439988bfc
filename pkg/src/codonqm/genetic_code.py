"""Nucleotide alphabet, hydrogen-bond patterns, and the standard genetic code.

The 64 RNA codons form the basis of every Hamiltonian in this package. Each
amino acid owns a fixed, ordered list of synonymous codons; concatenating
those lists in level order (Met, Trp, the nine two-codon acids, Ile, the five
four-codon acids, Arg, Leu, Ser, then the three stop codons) yields the
global 64-state basis, which makes the coupled protein Hamiltonian literally
block-diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping

__all__ = [
    "ACCEPTOR",
    "AminoAcid",
    "Codon",
    "DONOR",
    "GeneticCode",
    "STANDARD_CODE",
    "Strand",
    "StrandError",
    "UNKNOWN_SITE",
    "bond_pattern",
    "dna",
    "reverse_transcribe",
    "rna",
    "transcribe",
]


class StrandError(ValueError):
    """A codon's strand kind does not fit the requested operation."""


class Strand(Enum):
    DNA = "DNA"
    RNA = "RNA"


DNA_LETTERS = "ACGT"
RNA_LETTERS = "ACGU"

DONOR = 1
ACCEPTOR = 0
UNKNOWN_SITE = None

# First two hydrogen-bond sites of each nucleotide, top site first. A carries
# only two sites; C, G, U and T carry a third whose role is never consulted.
_BOND_PATTERNS: dict[str, tuple[int | None, ...]] = {
    "A": (DONOR, ACCEPTOR),
    "C": (DONOR, ACCEPTOR, UNKNOWN_SITE),
    "G": (ACCEPTOR, DONOR, UNKNOWN_SITE),
    "U": (ACCEPTOR, DONOR, UNKNOWN_SITE),
    "T": (ACCEPTOR, DONOR, UNKNOWN_SITE),
}


def bond_pattern(nucleotide: str) -> tuple[int | None, ...]:
    """Donor/acceptor sites of a nucleotide letter (donor = 1, acceptor = 0)."""
    try:
        return _BOND_PATTERNS[nucleotide]
    except KeyError:
        raise ValueError(f"unknown nucleotide {nucleotide!r}") from None


@dataclass(frozen=True)
class Codon:
    """An ordered nucleotide triple on a fixed strand kind."""

    bases: str
    strand: Strand = Strand.RNA

    def __post_init__(self) -> None:
        letters = RNA_LETTERS if self.strand is Strand.RNA else DNA_LETTERS
        if len(self.bases) != 3 or any(b not in letters for b in self.bases):
            raise ValueError(
                f"{self.bases!r} is not a valid {self.strand.value} codon"
            )

    def __str__(self) -> str:
        return self.bases


def rna(text: str) -> Codon:
    return Codon(text.upper(), Strand.RNA)


def dna(text: str) -> Codon:
    return Codon(text.upper(), Strand.DNA)


def transcribe(codon: Codon) -> Codon:
    """Relabel a DNA codon as RNA (T becomes U, positions preserved)."""
    if codon.strand is not Strand.DNA:
        raise StrandError(f"cannot transcribe {codon}: already an RNA codon")
    return Codon(codon.bases.replace("T", "U"), Strand.RNA)


def reverse_transcribe(codon: Codon) -> Codon:
    """Relabel an RNA codon as DNA (U becomes T); inverse of :func:`transcribe`."""
    if codon.strand is not Strand.RNA:
        raise StrandError(f"cannot reverse-transcribe {codon}: already a DNA codon")
    return Codon(codon.bases.replace("U", "T"), Strand.DNA)


class AminoAcid(Enum):
    """The twenty amino acids in level order, plus the three stop signals.

    The enum value is the level index used for the energy ladder; stop
    signals sit past the amino acids and have no level index of their own.
    """

    MET = 1
    TRP = 2
    ASN = 3
    ASP = 4
    CYS = 5
    GLN = 6
    GLU = 7
    HIS = 8
    LYS = 9
    PHE = 10
    TYR = 11
    ILE = 12
    ALA = 13
    GLY = 14
    PRO = 15
    THR = 16
    VAL = 17
    ARG = 18
    LEU = 19
    SER = 20
    STOP1 = 21
    STOP2 = 22
    STOP3 = 23

    @property
    def is_stop(self) -> bool:
        return self.value > 20

    @property
    def index(self) -> int:
        """Level index 1..20; stop signals have none."""
        if self.is_stop:
            raise ValueError(f"{self.code} has no level index")
        return self.value

    @property
    def code(self) -> str:
        return self.name if self.is_stop else self.name.capitalize()

    @classmethod
    def from_code(cls, text: str) -> "AminoAcid":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown amino acid {text!r}") from None


# Canonical synonym orderings. Two-codon sets run C-before-U / A-before-G in
# the third position, four-codon sets run third position A, G, C, U, and the
# three-codon and six-codon sets follow the fixed orders below. These orders
# pin the sign convention of the imaginary couplings.
_CANONICAL_CODONS: dict[AminoAcid, tuple[str, ...]] = {
    AminoAcid.MET: ("AUG",),
    AminoAcid.TRP: ("UGG",),
    AminoAcid.ASN: ("AAC", "AAU"),
    AminoAcid.ASP: ("GAC", "GAU"),
    AminoAcid.CYS: ("UGC", "UGU"),
    AminoAcid.GLN: ("CAA", "CAG"),
    AminoAcid.GLU: ("GAA", "GAG"),
    AminoAcid.HIS: ("CAC", "CAU"),
    AminoAcid.LYS: ("AAA", "AAG"),
    AminoAcid.PHE: ("UUC", "UUU"),
    AminoAcid.TYR: ("UAC", "UAU"),
    AminoAcid.ILE: ("AUU", "AUA", "AUC"),
    AminoAcid.ALA: ("GCA", "GCG", "GCC", "GCU"),
    AminoAcid.GLY: ("GGA", "GGG", "GGC", "GGU"),
    AminoAcid.PRO: ("CCA", "CCG", "CCC", "CCU"),
    AminoAcid.THR: ("ACA", "ACG", "ACC", "ACU"),
    AminoAcid.VAL: ("GUA", "GUG", "GUC", "GUU"),
    AminoAcid.ARG: ("CGA", "CGC", "CGG", "CGU", "AGA", "AGG"),
    AminoAcid.LEU: ("CUA", "CUC", "CUG", "CUU", "UUA", "UUG"),
    AminoAcid.SER: ("UCA", "UCC", "UCG", "UCU", "AGC", "AGU"),
    AminoAcid.STOP1: ("UAA",),
    AminoAcid.STOP2: ("UAG",),
    AminoAcid.STOP3: ("UGA",),
}


@dataclass(frozen=True, eq=False)
class GeneticCode:
    """Codon-to-amino-acid map with canonical per-amino-acid codon orderings."""

    canonical_order: Mapping[AminoAcid, tuple[Codon, ...]]
    forward: Mapping[Codon, AminoAcid] = field(init=False)

    def __post_init__(self) -> None:
        forward: dict[Codon, AminoAcid] = {}
        for aa in AminoAcid:
            for codon in self.canonical_order[aa]:
                if codon.strand is not Strand.RNA:
                    raise ValueError(f"{codon} is not an RNA codon")
                if codon in forward:
                    raise ValueError(f"{codon} assigned twice")
                forward[codon] = aa
        if len(forward) != 64:
            raise ValueError(f"genetic code covers {len(forward)} codons, not 64")
        basis = tuple(c for aa in AminoAcid for c in self.canonical_order[aa])
        object.__setattr__(self, "forward", forward)
        object.__setattr__(self, "_basis", basis)
        object.__setattr__(self, "_basis_index", {c: i for i, c in enumerate(basis)})

    def amino_acid_of(self, codon: Codon) -> AminoAcid:
        if codon.strand is not Strand.RNA:
            raise StrandError(f"{codon} is a DNA codon; transcribe it first")
        return self.forward[codon]

    def synonym_set(self, aa: AminoAcid) -> tuple[Codon, ...]:
        return self.canonical_order[aa]

    def all_codons(self) -> tuple[Codon, ...]:
        """The 64 RNA codons in global basis order."""
        return self._basis

    def basis_index(self, codon: Codon) -> int:
        return self._basis_index[codon]

    def position_in_block(self, codon: Codon) -> int:
        """Index of a codon within its amino acid's canonical ordering."""
        return self.canonical_order[self.amino_acid_of(codon)].index(codon)


STANDARD_CODE = GeneticCode(
    {aa: tuple(rna(t) for t in texts) for aa, texts in _CANONICAL_CODONS.items()}
)
