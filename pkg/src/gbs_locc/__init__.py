"""One-way LOCC indistinguishable sets of generalized Bell states."""

from .certify import CertReport, Certificate, DifferenceSet, certify, closure_thm1, difference_set
from .core import (
    BoundReport,
    DomainError,
    GbsSet,
    PauliLabel,
    canonical_label,
    construct,
    construct_fan5,
    construct_sdm_even,
    construct_sdm_odd,
    construct_thm1,
    construct_thm2,
    construct_thm3,
    construct_thm4,
    construct_thm5,
    fgbs_known,
    fgbs_upper,
    k_max,
)
from .pauli import VandermondeSpec, apply_pauli, fourier_coeffs, pauli_overlap, root_of_unity, vandermonde_det
from .search import SearchConfig, SearchReport, residual, residual_gradient, search_distinguisher, verify_distinguisher

__version__ = "0.1.0"
