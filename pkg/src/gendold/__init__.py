"""Characteristic classes, parallelizability and unoriented bordism of
generalized Dold manifolds P(m, X) with X a complex flag manifold."""

__version__ = "0.1.0"

from .dold import DoldDescriptor, SWClass, Unsupported, sw_number_P, sw_total_P
from .flags import FlagDescriptor
from .numeric import DomainError
from .verdict import State, Verdict
from .verdicts import cobordism_verdict, parallelizable, stably_parallelizable

__all__ = [
    "DoldDescriptor", "DomainError", "FlagDescriptor", "SWClass", "State",
    "Unsupported", "Verdict", "cobordism_verdict", "parallelizable",
    "stably_parallelizable", "sw_number_P", "sw_total_P",
]
