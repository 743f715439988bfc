"""Golden-data verification of blocks and spectra.

The reference matrices and eigenpair tables below are hand-transcribed and
deliberately independent of the rule engine: :func:`verify_matrices` proves
that the engine regenerates every reference matrix entry-for-entry, and
:func:`verify_spectra` checks the numeric eigendecomposition of each
reference matrix against the closed-form eigenvalues and the tabulated
eigenvectors.

Tabulated vectors are compared by overlap magnitude (global phase is
irrelevant). Rows whose overlap falls below the threshold are flagged in the
report but never auto-corrected: the numeric decomposition of the reference
matrix is the ground truth, and a low overlap marks a suspected transcription
defect in that table row. One such row exists (the sextet-leu "E+a" row);
every other tabulated vector reproduces its numeric eigenvector exactly.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .eigen import closed_form_offsets, eigh
from .genetic_code import STANDARD_CODE, AminoAcid, Codon, rna
from .hamiltonian import LabeledMatrix, ModelParams, build_block

__all__ = [
    "BlockReport",
    "EigenpairCheck",
    "GoldenBlock",
    "GoldenEigenpair",
    "VerificationReport",
    "golden_block",
    "golden_block_matrix",
    "golden_eigenpairs",
    "verify_matrices",
    "verify_spectra",
]

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)
_S12 = math.sqrt(12.0)

_I = 1j

# Off-diagonal coefficients of the coupling strength; the diagonal carries the
# block's level energy. Hand-coded, never generated.
_PAIR_COEFF = np.array(
    [
        [0, 1],
        [1, 0],
    ],
    dtype=np.complex128,
)

_TRIPLE_COEFF = np.array(
    [
        [0, 1, 1],
        [1, 0, _I],
        [1, -_I, 0],
    ],
    dtype=np.complex128,
)

_QUARTET_COEFF = np.array(
    [
        [0, 1, _I, 1],
        [1, 0, 1, _I],
        [-_I, 1, 0, 1],
        [1, -_I, 1, 0],
    ],
    dtype=np.complex128,
)

_ARG_COEFF = np.array(
    [
        [0, _I, 1, 1, _I, 0],
        [-_I, 0, 1, 1, 0, 0],
        [1, 1, 0, _I, 0, _I],
        [1, 1, -_I, 0, 0, 0],
        [-_I, 0, 0, 0, 0, 1],
        [0, 0, -_I, 0, 1, 0],
    ],
    dtype=np.complex128,
)

_LEU_COEFF = np.array(
    [
        [0, _I, 1, 1, 1, 0],
        [-_I, 0, 1, 1, 0, 0],
        [1, 1, 0, _I, 0, 1],
        [1, 1, -_I, 0, 0, 0],
        [1, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0],
    ],
    dtype=np.complex128,
)

_SER_COEFF = np.array(
    [
        [0, _I, 1, 1, 0, 0],
        [-_I, 0, 1, 1, 1, 0],
        [1, 1, 0, _I, 0, 0],
        [1, 1, -_I, 0, 0, 1],
        [0, 1, 0, 0, 0, 1],
        [0, 0, 0, 1, 1, 0],
    ],
    dtype=np.complex128,
)


@dataclass(frozen=True, eq=False)
class GoldenBlock:
    """Hand-transcribed reference block: off-diagonal coefficients of ``a``."""

    amino_acid: AminoAcid
    labels: tuple[Codon, ...]
    coeff: np.ndarray
    source_id: str


def golden_block(aa: AminoAcid) -> GoldenBlock:
    """Reference block for a coding amino acid. Stops have no reference block."""
    if aa.is_stop:
        raise ValueError(f"{aa.code} has no reference block; its block is 1x1")
    labels = STANDARD_CODE.synonym_set(aa)
    n = len(labels)
    if n == 1:
        coeff, source = np.zeros((1, 1), dtype=np.complex128), "singlet"
    elif n == 2:
        coeff, source = _PAIR_COEFF, "pair"
    elif n == 3:
        coeff, source = _TRIPLE_COEFF, "triple"
    elif n == 4:
        coeff, source = _QUARTET_COEFF, "quartet"
    elif aa is AminoAcid.ARG:
        coeff, source = _ARG_COEFF, "sextet-arg"
    elif aa is AminoAcid.LEU:
        coeff, source = _LEU_COEFF, "sextet-leu"
    else:
        coeff, source = _SER_COEFF, "sextet-ser"
    return GoldenBlock(aa, labels, coeff, source)


def golden_block_matrix(aa: AminoAcid, params: ModelParams) -> LabeledMatrix:
    """Reference block evaluated at the given level energy and coupling."""
    if aa.is_stop:
        labels = STANDARD_CODE.synonym_set(aa)
        return LabeledMatrix(
            labels, np.array([[params.energy_of(aa)]], dtype=np.complex128)
        )
    gold = golden_block(aa)
    n = len(gold.labels)
    m = params.energy_of(aa) * np.eye(n, dtype=np.complex128) + params.a * gold.coeff
    return LabeledMatrix(gold.labels, m)


@dataclass(frozen=True, eq=False)
class GoldenEigenpair:
    """Tabulated eigenpair: eigenvalue offset in units of ``a`` plus the
    eigenvector's exact coefficients over codon kets."""

    amino_acid: AminoAcid
    row_id: str
    offset: float
    vector: dict[str, complex]


def _pairs(aa: AminoAcid, rows: list[tuple[str, float, dict[str, complex]]]):
    return tuple(
        GoldenEigenpair(aa, f"{aa.code}:{name}", offset, vector)
        for name, offset, vector in rows
    )


def _single_rows(codon: str) -> list[tuple[str, float, dict[str, complex]]]:
    return [("E", 0.0, {codon: 1.0 + 0j})]


def _pair_rows(c1: str, c2: str) -> list[tuple[str, float, dict[str, complex]]]:
    h = 1.0 / _SQRT2
    return [
        ("E-a", -1.0, {c1: h, c2: -h}),
        ("E+a", 1.0, {c1: h, c2: h}),
    ]


def _triple_rows(c1: str, c2: str, c3: str):
    s3 = 1.0 / _SQRT3
    return [
        ("E", 0.0, {c1: -_I * s3, c2: -s3, c3: s3}),
        (
            "E-sqrt3*a",
            -_SQRT3,
            {c1: (_I - _SQRT3) / 2 * s3, c2: (1 - _I * _SQRT3) / 2 * s3, c3: s3},
        ),
        (
            "E+sqrt3*a",
            _SQRT3,
            {c1: (_I + _SQRT3) / 2 * s3, c2: (1 + _I * _SQRT3) / 2 * s3, c3: s3},
        ),
    ]


def _quartet_rows(c1: str, c2: str, c3: str, c4: str):
    q = 2 * _SQRT2
    return [
        ("E-(1+sqrt2)*a", -(1 + _SQRT2), {c1: (-1 + _I) / q, c2: (1 - _I) / q, c3: -0.5, c4: 0.5}),
        ("E+(1-sqrt2)*a", 1 - _SQRT2, {c1: (-1 - _I) / q, c2: (-1 - _I) / q, c3: 0.5, c4: 0.5}),
        ("E-(1-sqrt2)*a", _SQRT2 - 1, {c1: (1 - _I) / q, c2: (-1 + _I) / q, c3: -0.5, c4: 0.5}),
        ("E+(1+sqrt2)*a", 1 + _SQRT2, {c1: (1 + _I) / q, c2: (1 + _I) / q, c3: 0.5, c4: 0.5}),
    ]


def _arg_rows():
    t = 2 * _SQRT3
    return [
        ("E-a", -1.0, {"CGC": (1 - _I) / t, "CGU": (-1 + _I) / t, "AGA": -1 / _SQRT3, "AGG": 1 / _SQRT3}),
        ("E+a", 1.0, {"CGC": -(1 + _I) / t, "CGU": -(1 + _I) / t, "AGA": 1 / _SQRT3, "AGG": 1 / _SQRT3}),
        (
            "E-(1+sqrt3)*a",
            -(1 + _SQRT3),
            {"CGA": _I * _SQRT3 / _S12, "CGC": (-1 + _I) / _S12, "CGG": -_I * _SQRT3 / _S12,
             "CGU": (1 - _I) / _S12, "AGA": -1 / _S12, "AGG": 1 / _S12},
        ),
        (
            "E+(1-sqrt3)*a",
            1 - _SQRT3,
            {"CGA": -_I * _SQRT3 / _S12, "CGC": (1 + _I) / _S12, "CGG": -_I * _SQRT3 / _S12,
             "CGU": (1 + _I) / _S12, "AGA": 1 / _S12, "AGG": 1 / _S12},
        ),
        (
            "E-(1-sqrt3)*a",
            _SQRT3 - 1,
            {"CGA": -_I * _SQRT3 / _S12, "CGC": (-1 + _I) / _S12, "CGG": _I * _SQRT3 / _S12,
             "CGU": (1 - _I) / _S12, "AGA": -1 / _S12, "AGG": 1 / _S12},
        ),
        (
            "E+(1+sqrt3)*a",
            1 + _SQRT3,
            {"CGA": _I * _SQRT3 / _S12, "CGC": (1 + _I) / _S12, "CGG": _I * _SQRT3 / _S12,
             "CGU": (1 + _I) / _S12, "AGA": 1 / _S12, "AGG": 1 / _S12},
        ),
    ]


def _leu_rows():
    t = 2 * _SQRT3
    return [
        ("E-a", -1.0, {"CUC": (-1 - _I) / t, "CUU": (1 + _I) / t, "UUA": -1 / _SQRT3, "UUG": 1 / _SQRT3}),
        # Reproduced verbatim; this row does not satisfy the eigenproblem of
        # the reference matrix and is expected to be flagged by the report.
        ("E+a", 1.0, {"CUC": (-1 + _I) / t, "CUU": -(1 + _I) / t, "UUA": 1 / _SQRT3, "UUG": 1 / _SQRT3}),
        (
            "E-(1+sqrt3)*a",
            -(1 + _SQRT3),
            {"CUA": _SQRT3 / _S12, "CUC": (1 + _I) / _S12, "CUG": -_SQRT3 / _S12,
             "CUU": -(1 + _I) / _S12, "UUA": -1 / _S12, "UUG": 1 / _S12},
        ),
        (
            "E+(1-sqrt3)*a",
            1 - _SQRT3,
            {"CUA": -_SQRT3 / _S12, "CUC": (1 - _I) / _S12, "CUG": -_SQRT3 / _S12,
             "CUU": (1 - _I) / _S12, "UUA": 1 / _S12, "UUG": 1 / _S12},
        ),
        (
            "E-(1-sqrt3)*a",
            _SQRT3 - 1,
            {"CUA": -_SQRT3 / _S12, "CUC": (1 + _I) / _S12, "CUG": _SQRT3 / _S12,
             "CUU": -(1 + _I) / _S12, "UUA": -1 / _S12, "UUG": 1 / _S12},
        ),
        (
            "E+(1+sqrt3)*a",
            1 + _SQRT3,
            {"CUA": _SQRT3 / _S12, "CUC": (1 - _I) / _S12, "CUG": _SQRT3 / _S12,
             "CUU": (1 - _I) / _S12, "UUA": 1 / _S12, "UUG": 1 / _S12},
        ),
    ]


def _ser_rows():
    t = 2 * _SQRT3
    return [
        ("E-a", -1.0, {"UCA": (-1 + _I) / t, "UCG": (1 - _I) / t, "AGC": -1 / _SQRT3, "AGU": 1 / _SQRT3}),
        ("E+a", 1.0, {"UCA": -(1 + _I) / t, "UCG": -(1 + _I) / t, "AGC": 1 / _SQRT3, "AGU": 1 / _SQRT3}),
        (
            "E-(1+sqrt3)*a",
            -(1 + _SQRT3),
            {"UCA": (1 - _I) / _S12, "UCC": _SQRT3 / _S12, "UCG": (-1 + _I) / _S12,
             "UCU": -_SQRT3 / _S12, "AGC": -1 / _S12, "AGU": 1 / _S12},
        ),
        (
            "E+(1-sqrt3)*a",
            1 - _SQRT3,
            {"UCA": (1 + _I) / _S12, "UCC": -_SQRT3 / _S12, "UCG": (1 + _I) / _S12,
             "UCU": -_SQRT3 / _S12, "AGC": 1 / _S12, "AGU": 1 / _S12},
        ),
        (
            "E-(1-sqrt3)*a",
            _SQRT3 - 1,
            {"UCA": (1 - _I) / _S12, "UCC": -_SQRT3 / _S12, "UCG": (-1 + _I) / _S12,
             "UCU": _SQRT3 / _S12, "AGC": -1 / _S12, "AGU": 1 / _S12},
        ),
        (
            "E+(1+sqrt3)*a",
            1 + _SQRT3,
            {"UCA": (1 + _I) / _S12, "UCC": _SQRT3 / _S12, "UCG": (1 + _I) / _S12,
             "UCU": _SQRT3 / _S12, "AGC": 1 / _S12, "AGU": 1 / _S12},
        ),
    ]


def golden_eigenpairs(aa: AminoAcid) -> tuple[GoldenEigenpair, ...]:
    """Tabulated eigenpairs for one amino acid (stops get the trivial pair)."""
    codons = [c.bases for c in STANDARD_CODE.synonym_set(aa)]
    if len(codons) == 1:
        rows = _single_rows(codons[0])
    elif len(codons) == 2:
        rows = _pair_rows(*codons)
    elif len(codons) == 3:
        rows = _triple_rows(*codons)
    elif len(codons) == 4:
        rows = _quartet_rows(*codons)
    elif aa is AminoAcid.ARG:
        rows = _arg_rows()
    elif aa is AminoAcid.LEU:
        rows = _leu_rows()
    else:
        rows = _ser_rows()
    return _pairs(aa, rows)


def verify_matrices(params: ModelParams) -> dict[AminoAcid, bool]:
    """Exact entrywise equality of rule-engine blocks against the references."""
    result: dict[AminoAcid, bool] = {}
    for aa in AminoAcid:
        if aa.is_stop:
            continue
        built = build_block(aa, params)
        gold = golden_block_matrix(aa, params)
        result[aa] = built.labels == gold.labels and bool(
            np.array_equal(built.entries, gold.entries)
        )
    return result


@dataclass(frozen=True)
class EigenpairCheck:
    row_id: str
    target_eigenvalue: float
    nearest_eigenvalue: float
    overlap: float
    flagged: bool


@dataclass(frozen=True)
class BlockReport:
    amino_acid: AminoAcid
    matrix_match: bool
    eigenvalue_max_abs_error: float
    eigenvalue_scaled_error: float
    eigenpairs: tuple[EigenpairCheck, ...]


@dataclass(frozen=True)
class VerificationReport:
    """Per-block discrepancy report covering all 20 amino acids and 3 stops."""

    blocks: tuple[BlockReport, ...]
    overlap_tol: float

    @property
    def flags(self) -> tuple[tuple[AminoAcid, EigenpairCheck], ...]:
        return tuple(
            (b.amino_acid, pair)
            for b in self.blocks
            for pair in b.eigenpairs
            if pair.flagged
        )

    def all_matrices_match(self) -> bool:
        return all(b.matrix_match for b in self.blocks)

    def max_scaled_eigenvalue_error(self) -> float:
        return max(b.eigenvalue_scaled_error for b in self.blocks)

    def passed(self, tol: float) -> bool:
        """Matrices match and every scaled eigenvalue error is within ``tol``.

        Overlap flags are informational and never fail the check.
        """
        return self.all_matrices_match() and self.max_scaled_eigenvalue_error() <= tol

    def to_dict(self) -> dict:
        return {
            "overlap_tol": self.overlap_tol,
            "all_matrices_match": self.all_matrices_match(),
            "max_scaled_eigenvalue_error": self.max_scaled_eigenvalue_error(),
            "flagged_rows": [pair.row_id for _, pair in self.flags],
            "blocks": [
                {
                    "amino_acid": b.amino_acid.code,
                    "matrix_match": b.matrix_match,
                    "eigenvalue_max_abs_error": b.eigenvalue_max_abs_error,
                    "eigenvalue_scaled_error": b.eigenvalue_scaled_error,
                    "eigenpairs": [
                        {
                            "row_id": p.row_id,
                            "target_eigenvalue": p.target_eigenvalue,
                            "nearest_eigenvalue": p.nearest_eigenvalue,
                            "overlap": p.overlap,
                            "flagged": p.flagged,
                        }
                        for p in b.eigenpairs
                    ],
                }
                for b in self.blocks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [
            f"{'block':<6} {'matrix':<7} {'eig err (scaled)':<17} overlaps",
        ]
        for b in self.blocks:
            overlaps = " ".join(f"{p.overlap:.9f}" for p in b.eigenpairs)
            match = "ok" if b.matrix_match else "MISMATCH"
            lines.append(
                f"{b.amino_acid.code:<6} {match:<7} {b.eigenvalue_scaled_error:<17.3e} {overlaps}"
            )
        if self.flags:
            lines.append("")
            lines.append(f"flagged rows (overlap < 1 - {self.overlap_tol:g}):")
            for aa, pair in self.flags:
                lines.append(
                    f"  {pair.row_id}: overlap {pair.overlap:.9f} "
                    "(suspected transcription defect; numeric eigenvector is ground truth)"
                )
        else:
            lines.append("")
            lines.append("no flagged rows")
        return "\n".join(lines)


def verify_spectra(params: ModelParams, tol: float = 1e-8) -> VerificationReport:
    """Check numeric spectra of the reference blocks against closed forms.

    Eigenvalues are compared to ``E + a * offsets``; the error is also
    reported relative to ``|E| + a``. Tabulated eigenvectors are compared by
    overlap with the numeric eigenvector of the matching eigenvalue; rows
    with overlap below ``1 - tol`` are flagged, not failed.
    """
    blocks: list[BlockReport] = []
    for aa in AminoAcid:
        matrix = golden_block_matrix(aa, params)
        energy = params.energy_of(aa)
        system = eigh(matrix.entries)
        expected = energy + params.a * np.asarray(closed_form_offsets(matrix.n))
        max_err = float(np.max(np.abs(system.eigenvalues - expected)))
        scale = abs(energy) + params.a
        scaled = max_err / scale if scale > 0 else max_err

        checks: list[EigenpairCheck] = []
        index = {c.bases: k for k, c in enumerate(matrix.labels)}
        for pair in golden_eigenpairs(aa):
            target = energy + params.a * pair.offset
            k = int(np.argmin(np.abs(system.eigenvalues - target)))
            tabulated = np.zeros(matrix.n, dtype=np.complex128)
            for ket, coefficient in pair.vector.items():
                tabulated[index[ket]] = coefficient
            tabulated /= np.linalg.norm(tabulated)
            overlap = float(abs(np.vdot(system.vector(k), tabulated)))
            checks.append(
                EigenpairCheck(
                    row_id=pair.row_id,
                    target_eigenvalue=target,
                    nearest_eigenvalue=float(system.eigenvalues[k]),
                    overlap=overlap,
                    flagged=overlap < 1.0 - tol,
                )
            )

        if aa.is_stop:
            matrix_match = True
        else:
            built = build_block(aa, params)
            matrix_match = bool(np.array_equal(built.entries, matrix.entries))
        blocks.append(
            BlockReport(aa, matrix_match, max_err, scaled, tuple(checks))
        )
    return VerificationReport(tuple(blocks), tol)
