"""Generalized Pauli action on single-qudit vectors.

Vectors are 1-D complex numpy arrays of length d.  ``X|j> = |j+1 mod d>`` and
``Z|j> = w^j |j>`` with ``w = exp(2 pi i / d)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import PauliLabel, check_dimension

# construction-side and input-side normalization tolerances
NORM_TOL = 1e-12
NORM_TOL_INPUT = 1e-10


@lru_cache(maxsize=None)
def roots_table(d: int) -> np.ndarray:
    """``w^k`` for k = 0..d-1; read-only, shared per d."""
    check_dimension(d)
    k = np.arange(d)
    table = np.exp(2j * np.pi * k / d)
    table.setflags(write=False)
    return table


def root_of_unity(d: int, k: int) -> complex:
    return complex(roots_table(d)[k % d])


def as_vector(v, d: int | None = None, normalized: bool = True, tol: float = NORM_TOL_INPUT) -> np.ndarray:
    """Coerce ``v`` to a complex vector, checking length and (optionally) norm."""
    arr = np.asarray(v, dtype=complex)
    if arr.ndim != 1:
        raise ValueError("state must be a 1-D vector")
    if d is not None and arr.shape[0] != d:
        raise ValueError(f"dimension mismatch: vector has length {arr.shape[0]}, expected {d}")
    check_dimension(arr.shape[0])
    if normalized:
        norm2 = float(np.vdot(arr, arr).real)
        if abs(norm2 - 1.0) > tol:
            raise ValueError(f"vector is not normalized (squared norm {norm2!r})")
    return arr


def normalize(v) -> np.ndarray:
    arr = np.asarray(v, dtype=complex)
    return arr / np.linalg.norm(arr)


def _check_label(label, d: int) -> PauliLabel:
    m, n = label
    if not (0 <= m < d and 0 <= n < d):
        raise ValueError(f"dimension mismatch: label ({m},{n}) is not a residue pair mod {d}")
    return PauliLabel(int(m), int(n))


def apply_pauli(label, v) -> np.ndarray:
    """Return ``X^m Z^n v``; entry k is ``w^(n(k-m)) v[(k-m) mod d]``."""
    v = as_vector(v, normalized=False)
    d = v.shape[0]
    m, n = _check_label(label, d)
    src = (np.arange(d) - m) % d
    return roots_table(d)[(n * src) % d] * v[src]


def pauli_overlap(label, v) -> complex:
    """``<v| X^m Z^n |v> = sum_j conj(v[j+m]) w^(jn) v[j]``."""
    v = as_vector(v)
    d = v.shape[0]
    m, n = _check_label(label, d)
    j = np.arange(d)
    return complex(np.sum(np.conj(v[(j + m) % d]) * roots_table(d)[(j * n) % d] * v))


def fourier_matrix(d: int) -> np.ndarray:
    """``W[i, j] = w^(ij)``."""
    i = np.arange(d)
    return roots_table(d)[np.outer(i, i) % d]


def fourier_coeffs(v) -> np.ndarray:
    """``b_i = sum_j w^(-ij) |v_j|^2``; b_0 is the squared norm."""
    v = as_vector(v)
    return np.conj(fourier_matrix(v.shape[0])) @ np.abs(v) ** 2


@dataclass(frozen=True)
class VandermondeSpec:
    """Rows ``i1 .. i1+k-1`` and strictly increasing columns of the d x d Fourier matrix."""

    d: int
    i1: int
    cols: tuple[int, ...]

    def __post_init__(self):
        check_dimension(self.d)
        cols = tuple(int(c) for c in self.cols)
        object.__setattr__(self, "cols", cols)
        if not 0 <= self.i1 <= self.d - 1:
            raise ValueError(f"row start {self.i1} outside [0, {self.d - 1}]")
        if not 1 <= len(cols) <= self.d:
            raise ValueError("need between 1 and d columns")
        if any(c < 0 or c >= self.d for c in cols):
            raise ValueError("column index outside [0, d-1]")
        if any(b <= a for a, b in zip(cols, cols[1:])):
            raise ValueError("columns must be strictly increasing")

    @property
    def k(self) -> int:
        return len(self.cols)

    def matrix(self) -> np.ndarray:
        rows = np.arange(self.i1, self.i1 + self.k)
        return roots_table(self.d)[np.outer(rows, self.cols) % self.d]


def vandermonde_det(spec: VandermondeSpec) -> complex:
    """Closed-form determinant of the Fourier submatrix described by ``spec``.

    ``w^(i1 * sum(cols)) * prod_{l<m} (w^cols[m] - w^cols[l])``
    """
    w = roots_table(spec.d)
    det = w[(spec.i1 * sum(spec.cols)) % spec.d]
    nodes = w[list(spec.cols)]
    for m in range(spec.k):
        for l in range(m):
            det = det * (nodes[m] - nodes[l])
    return complex(det)
