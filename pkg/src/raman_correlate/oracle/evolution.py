"""Exact propagation ``exp(-i H t)`` by Hermitian eigendecomposition.

The Hamiltonian is split into the connected components of its sparsity
graph (the sectors of its conserved quantities); each block touched by a
state is diagonalized once and cached.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from ..errors import DomainError, NumericalError
from .states import Ensemble, OracleState

__all__ = ["ExactEvolver", "evolve"]


class ExactEvolver:
    def __init__(self, H):
        H = sp.csr_matrix(H)
        if H.shape[0] != H.shape[1]:
            raise DomainError("Hamiltonian must be square")
        diff = (H - H.conj().T).tocsr()
        herm = float(np.abs(diff.data).max()) if diff.nnz else 0.0
        scale = float(np.abs(H.data).max()) if H.nnz else 1.0
        if herm > 1e-12 * max(1.0, scale):
            raise DomainError(f"Hamiltonian is not Hermitian (residual {herm:.3g})")
        self.H = H
        pattern = H.copy()
        pattern.data = (pattern.data != 0).astype(float)
        self.n_blocks, self.labels = connected_components(pattern, directed=False)
        order = np.argsort(self.labels, kind="stable")
        bounds = np.searchsorted(self.labels[order], np.arange(self.n_blocks + 1))
        self._members = [order[bounds[k] : bounds[k + 1]] for k in range(self.n_blocks)]
        self._cache: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}

    @property
    def dimension(self) -> int:
        return self.H.shape[0]

    def _block(self, k: int):
        if k not in self._cache:
            idx = self._members[k]
            Hb = self.H[idx][:, idx].toarray()
            try:
                w, V = sla.eigh(Hb)
            except (np.linalg.LinAlgError, ValueError) as exc:
                raise NumericalError(
                    f"eigendecomposition failed on block {k} of size {idx.size} "
                    f"(max |H| = {np.abs(Hb).max():.3g})"
                ) from exc
            self._cache[k] = (idx, w, V)
        return self._cache[k]

    def apply(self, vector: np.ndarray, t: float) -> np.ndarray:
        """``exp(-i H t) vector`` for an arbitrary (unnormalized) vector."""
        vector = np.asarray(vector, dtype=complex)
        if t == 0:
            return vector.copy()
        out = np.zeros_like(vector)
        for k in np.unique(self.labels[np.flatnonzero(vector)]):
            idx, w, V = self._block(k)
            out[idx] = V @ (np.exp(-1j * w * t) * (V.conj().T @ vector[idx]))
        return out

    def evolve_ensemble(self, ens: Ensemble, t: float) -> Ensemble:
        return Ensemble(ens.space, ens.weights, [self.apply(v, t) for v in ens.vectors])


def evolve(H, state, t: float):
    """Evolve an :class:`OracleState` or :class:`Ensemble` by time ``t``.

    ``H`` may be a matrix or a prebuilt :class:`ExactEvolver` (whose block
    eigendecompositions are reused).
    """
    if not np.isfinite(t):
        raise DomainError("evolution time must be finite")
    ev = H if isinstance(H, ExactEvolver) else ExactEvolver(H)
    if isinstance(state, Ensemble):
        return ev.evolve_ensemble(state, t)
    return OracleState(state.space, ev.apply(state.vector, t))
