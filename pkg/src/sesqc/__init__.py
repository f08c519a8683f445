"""Quantum computation in the single-excitation subspace of a tunably coupled qubit array."""

from .densecx import HermitianError, equal_up_to_global_phase, evolve, hermitian_eig, propagator
from .grover import GroverPlan, GroverResult, n_grover, run_grover
from .hwmodel import HardwareModel, build_ses_hamiltonian
from .resources import compare_resources
from .schedule import ControlSchedule, ControlSegment, compile_grover_schedule, execute_schedule_ses

__all__ = [
    "HermitianError",
    "equal_up_to_global_phase",
    "evolve",
    "hermitian_eig",
    "propagator",
    "GroverPlan",
    "GroverResult",
    "n_grover",
    "run_grover",
    "HardwareModel",
    "build_ses_hamiltonian",
    "compare_resources",
    "ControlSchedule",
    "ControlSegment",
    "compile_grover_schedule",
    "execute_schedule_ses",
]
