"""Fifth-order finite-difference WENO with classical and adaptive mapped weights."""

from mappedweno.mapping import AdaptiveContext, LocalOperatorSpec, MappingSpec, apply_mapping
from mappedweno.reconstruction import OPTIMAL_WEIGHTS, WeightTriple
from mappedweno.schemes import COMPARED_SCHEMES, get_scheme

__all__ = [
    "OPTIMAL_WEIGHTS", "COMPARED_SCHEMES", "AdaptiveContext", "LocalOperatorSpec",
    "MappingSpec", "WeightTriple", "apply_mapping", "get_scheme",
]
