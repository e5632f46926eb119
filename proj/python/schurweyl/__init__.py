"""Symmetry-sector decomposition and entanglement diagnostics for N identical
n-level particles.

Thin re-export of the compiled core; amplitudes are flat lists of complex
numbers in basis order (particle 1 most significant, 1-based digits) and are
normalized on ingest.
"""

from schurweyl._core import (
    bipartite_entropy,
    coupled_basis,
    decomposition,
    dicke_profile,
    mes_basis,
    pairwise_concurrences,
    product_blocks,
    sector_weights,
    single_particle_entropies,
    spin_flip_concurrence,
    symmetry_adapted_basis,
    verify_claims,
)

__all__ = [
    "bipartite_entropy",
    "coupled_basis",
    "decomposition",
    "dicke_profile",
    "mes_basis",
    "pairwise_concurrences",
    "product_blocks",
    "sector_weights",
    "single_particle_entropies",
    "spin_flip_concurrence",
    "symmetry_adapted_basis",
    "verify_claims",
]

__version__ = "0.1.0"
