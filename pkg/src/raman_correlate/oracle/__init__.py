"""Brute-force truncated Fock-space oracle for the Raman models."""

from .checks import *  # noqa: F401,F403
from .evolution import ExactEvolver, evolve
from .hamiltonians import build_effective_hamiltonian, build_trilinear_hamiltonian
from .space import TruncatedSpace
from .states import Ensemble, OracleState, coherent_amplitudes, squeezed_fock_amplitudes, thermal_weights


def expectation(state, descriptor):
    """Exact expectation of an operator descriptor (see ``TruncatedSpace.operator``)
    on an :class:`OracleState` or :class:`Ensemble`."""
    op = state.space.operator(descriptor) if isinstance(descriptor, str) else descriptor
    if isinstance(state, Ensemble):
        return state.expectation(op)
    v = state.vector
    return complex(v.conj() @ (op @ v))
