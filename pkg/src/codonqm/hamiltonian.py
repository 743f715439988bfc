"""Model parameters and Hamiltonian builders over the 64-codon basis.

The DNA-side Hamiltonian is diagonal with one distinct energy per codon. The
protein side comes in two flavours: a diagonal matrix whose entries repeat
the level energy of each codon's amino acid (degenerate within every synonym
set), and the coupled Hamiltonian that adds the off-diagonal amplitudes of
:mod:`codonqm.coupling` inside each synonym block. All matrices are Hermitian
by construction, exactly.

Energies are dimensionless model units; no physical scale is attached.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Mapping

import numpy as np

from .coupling import coupling_amplitude
from .genetic_code import (
    STANDARD_CODE,
    AminoAcid,
    Codon,
    Strand,
    reverse_transcribe,
)

__all__ = [
    "DNA_BASIS",
    "LabeledMatrix",
    "ModelParams",
    "ParamsError",
    "assemble_h_prot",
    "build_block",
    "build_h_dna",
    "build_h_prot_degenerate",
]

N_CODONS = 64

#: the 64 DNA codons, aligned index-for-index with the RNA basis order
DNA_BASIS: tuple[Codon, ...] = tuple(
    reverse_transcribe(c) for c in STANDARD_CODE.all_codons()
)
_DNA_INDEX = {c: i for i, c in enumerate(DNA_BASIS)}


class ParamsError(ValueError):
    """Unusable model parameters or parameter file."""


def _default_energies() -> tuple[float, ...]:
    # Level spacing 10*a beats the widest intra-block spread 2*(1+sqrt(3))*a,
    # so distinct blocks cannot collide accidentally.
    return tuple(10.0 * n for n in range(1, 21))


def _default_dna_energies() -> tuple[float, ...]:
    return tuple(float(k) for k in range(1, N_CODONS + 1))


@dataclass(frozen=True)
class ModelParams:
    """Coupling strength plus the diagonal energies of both sides.

    ``energies[n-1]`` is the level energy of the amino acid with level index
    ``n``; ``stop_energies`` covers the three stop codons; ``dna_energies``
    follows :data:`DNA_BASIS` order. ``a = 0`` is admitted as the uncoupled
    limit in which the protein Hamiltonian degenerates to its diagonal.
    """

    a: float = 1.0
    energies: tuple[float, ...] = field(default_factory=_default_energies)
    stop_energies: tuple[float, float, float] = (210.0, 220.0, 230.0)
    dna_energies: tuple[float, ...] = field(default_factory=_default_dna_energies)

    def __post_init__(self) -> None:
        if not math.isfinite(self.a) or self.a < 0.0:
            raise ParamsError(f"coupling strength must be finite and >= 0, got {self.a}")
        for name, values, want in (
            ("energies", self.energies, 20),
            ("stop_energies", self.stop_energies, 3),
            ("dna_energies", self.dna_energies, N_CODONS),
        ):
            if len(values) != want:
                raise ParamsError(f"{name} needs {want} entries, got {len(values)}")
            if not all(math.isfinite(v) for v in values):
                raise ParamsError(f"{name} contains a non-finite value")

    def energy_of(self, aa: AminoAcid) -> float:
        if aa.is_stop:
            return self.stop_energies[aa.value - 21]
        return self.energies[aa.index - 1]

    def dna_energy_of(self, codon: Codon) -> float:
        if codon.strand is not Strand.DNA:
            codon = reverse_transcribe(codon)
        return self.dna_energies[_DNA_INDEX[codon]]

    def with_coupling(self, a: float) -> "ModelParams":
        return replace(self, a=a)

    @classmethod
    def from_dict(cls, raw: Mapping) -> "ModelParams":
        known = {"a", "energies", "stop_energies", "dna_energies"}
        unknown = set(raw) - known
        if unknown:
            raise ParamsError(f"unknown parameter fields: {sorted(unknown)}")
        try:
            a = float(raw.get("a", 1.0))
        except (TypeError, ValueError):
            raise ParamsError(f"field 'a' must be a number, got {raw['a']!r}") from None

        energies = list(_default_energies())
        for name, value in dict(raw.get("energies", {})).items():
            aa = AminoAcid.from_code(name)
            if aa.is_stop:
                raise ParamsError(f"{name!r} belongs in stop_energies, not energies")
            energies[aa.index - 1] = float(value)

        stops = raw.get("stop_energies", (210.0, 220.0, 230.0))
        stops = tuple(float(v) for v in stops)
        if len(stops) != 3:
            raise ParamsError(f"stop_energies needs 3 entries, got {len(stops)}")

        dna_energies = list(_default_dna_energies())
        for text, value in dict(raw.get("dna_energies", {})).items():
            codon = Codon(str(text).upper(), Strand.DNA)
            dna_energies[_DNA_INDEX[codon]] = float(value)

        return cls(a, tuple(energies), stops, tuple(dna_energies))

    @classmethod
    def from_file(cls, path: str) -> "ModelParams":
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise ParamsError(f"cannot read parameter file {path!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParamsError(f"parameter file {path!r} is not valid JSON: {exc}") from exc
        if not isinstance(raw, dict):
            raise ParamsError(f"parameter file {path!r} must hold a JSON object")
        try:
            return cls.from_dict(raw)
        except ParamsError:
            raise
        except (TypeError, ValueError) as exc:
            raise ParamsError(f"parameter file {path!r}: {exc}") from exc


@dataclass(frozen=True, eq=False)
class LabeledMatrix:
    """A square complex matrix whose rows/columns are labeled by codons.

    The entries array is shared, not copied; treat it as read-only.
    """

    labels: tuple[Codon, ...]
    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.asarray(self.entries, dtype=np.complex128)
        n = len(self.labels)
        if entries.shape != (n, n):
            raise ValueError(f"entries shape {entries.shape} does not fit {n} labels")
        if len(set(self.labels)) != n:
            raise ValueError("duplicate labels")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.labels)})

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, codon: Codon) -> int:
        return self._index[codon]

    def entry(self, row: Codon, col: Codon) -> complex:
        return complex(self.entries[self._index[row], self._index[col]])

    def trace(self) -> float:
        return float(np.trace(self.entries).real)

    def hermiticity_defect(self) -> float:
        """Largest magnitude of M - M^dagger; 0 for every built Hamiltonian."""
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))


def build_h_dna(params: ModelParams) -> LabeledMatrix:
    """Diagonal DNA-side Hamiltonian: one energy per DNA codon, zeros elsewhere."""
    diag = np.array([params.dna_energy_of(c) for c in DNA_BASIS], dtype=np.complex128)
    return LabeledMatrix(DNA_BASIS, np.diag(diag))


def build_h_prot_degenerate(params: ModelParams) -> LabeledMatrix:
    """Diagonal protein-side Hamiltonian; each codon carries its amino acid's energy."""
    basis = STANDARD_CODE.all_codons()
    diag = np.array(
        [params.energy_of(STANDARD_CODE.amino_acid_of(c)) for c in basis],
        dtype=np.complex128,
    )
    return LabeledMatrix(basis, np.diag(diag))


def build_block(aa: AminoAcid, params: ModelParams) -> LabeledMatrix:
    """Synonym-set block: level energy on the diagonal, rule-engine amplitudes off it.

    Stop codons yield 1x1 blocks.
    """
    codons = STANDARD_CODE.synonym_set(aa)
    n = len(codons)
    m = np.zeros((n, n), dtype=np.complex128)
    energy = params.energy_of(aa)
    for i in range(n):
        m[i, i] = energy
    for i in range(n):
        for j in range(i + 1, n):
            amp = coupling_amplitude(codons[i], codons[j], STANDARD_CODE, params.a)
            m[i, j] = amp
            m[j, i] = amp.conjugate()
    return LabeledMatrix(codons, m)


def assemble_h_prot(params: ModelParams) -> LabeledMatrix:
    """Coupled protein Hamiltonian: direct sum of all synonym-set blocks."""
    m = np.zeros((N_CODONS, N_CODONS), dtype=np.complex128)
    offset = 0
    for aa in AminoAcid:
        block = build_block(aa, params)
        k = block.n
        m[offset : offset + k, offset : offset + k] = block.entries
        offset += k
    return LabeledMatrix(STANDARD_CODE.all_codons(), m)
