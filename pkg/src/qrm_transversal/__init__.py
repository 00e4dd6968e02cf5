"""Quantum Reed-Muller codes on the hypercube: transversal subcube operators and their logic."""

from .classify import Classification, OperatorSpec
from .hypercube import Subcube, intersect
from .oracle import CodeOracle, PhaseFunction, phase_of_operator
from .qrm_code import QrmCode, parameters
from .synthesis import CzCircuit, arbitrary_subcube_circuit, minimal_covers

__all__ = [
    "Classification", "CodeOracle", "CzCircuit", "OperatorSpec", "PhaseFunction", "QrmCode",
    "Subcube", "arbitrary_subcube_circuit", "intersect", "minimal_covers",
    "parameters", "phase_of_operator",
]
