"""Exact commuting probabilities, bounds and Z-isoclinism for finite rings."""

__version__ = "0.1.0"

from .abelian import AbelianGroup, invariant_factors, is_cyclic, isomorphisms, quotient
from .bounds import REGISTRY, TheoremCheck, run_sweep
from .isoclin import RingPair, find_isoclinism, rings_isoclinic, verify_invariance
from .prob import pr, pr_all
from .ring import FiniteRing, Subring, builtin, ring_from_structure, subring_closure
from .ringspec import parse_ringspec

__all__ = [
    "AbelianGroup", "FiniteRing", "REGISTRY", "RingPair", "Subring", "TheoremCheck",
    "builtin", "find_isoclinism", "invariant_factors", "is_cyclic", "isomorphisms",
    "parse_ringspec", "pr", "pr_all", "quotient", "ring_from_structure",
    "rings_isoclinic", "run_sweep", "subring_closure", "verify_invariance",
]
