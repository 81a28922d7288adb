"""Verification workbench for Cox rings of K3 surfaces of Picard number two."""
from .lattice import (
    DivisorClass,
    IntersectionMatrix,
    LatticeError,
    h0_effective,
    h0_nef,
    is_effective,
    is_nef,
    lattice,
    pairing,
    validate,
)
from .catalog import PresentationTemplate, expected_generator_count, template
from .monomials import GeneratorSet, count_monomials, enumerate_monomials, koszul_quotient_dim
from .presentation import instantiate_template, ideal_slice_dim, quotient_dim
from .verify import verify_paper_counts, verify_presentation

__version__ = "0.1.0"
