"""Truncated multimode Fock spaces, ladder operators and observables."""

from __future__ import annotations

import re
from collections.abc import Sequence
from functools import cached_property, reduce

import numpy as np
import scipy.sparse as sp

from ..errors import DomainError, ResourceError

__all__ = ["TruncatedSpace", "DEFAULT_MAX_DIMENSION"]

DEFAULT_MAX_DIMENSION = 200_000

_TOKEN = re.compile(r"^(adag|a|n)_(\w+?)(?:\^(\d+))?$")


class TruncatedSpace:
    """Product of single-mode Fock spaces ``{0..cutoff}``.

    Basis states are occupation tuples enumerated lexicographically, the
    first label being the most significant digit.
    """

    def __init__(self, labels: Sequence[str], cutoffs: Sequence[int], max_dimension: int = DEFAULT_MAX_DIMENSION):
        labels = tuple(labels)
        cutoffs = tuple(int(c) for c in cutoffs)
        if len(labels) != len(cutoffs) or len(set(labels)) != len(labels):
            raise DomainError("need one cutoff per distinct mode label")
        if any(c < 1 for c in cutoffs):
            raise DomainError("every cutoff must be at least 1")
        self.labels = labels
        self.cutoffs = cutoffs
        self.shape = tuple(c + 1 for c in cutoffs)
        self.dimension = int(np.prod(self.shape))
        if self.dimension > max_dimension:
            raise ResourceError(f"truncated space of dimension {self.dimension} exceeds the cap {max_dimension}")

    def __repr__(self):
        inner = ", ".join(f"{l}<={c}" for l, c in zip(self.labels, self.cutoffs))
        return f"TruncatedSpace({inner}; dim={self.dimension})"

    def position(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"unknown mode {label!r}; space has {self.labels}") from None

    def index(self, occupations) -> int:
        return int(np.ravel_multi_index(tuple(occupations), self.shape))

    def occupations(self, index: int) -> tuple[int, ...]:
        return tuple(int(k) for k in np.unravel_index(index, self.shape))

    @cached_property
    def occupation_table(self) -> np.ndarray:
        """``(dimension, n_modes)`` array of occupation numbers."""
        grids = np.indices(self.shape).reshape(len(self.shape), -1)
        return grids.T.copy()

    def number(self, label: str) -> np.ndarray:
        """Diagonal of the number operator."""
        return self.occupation_table[:, self.position(label)].astype(float)

    def _embed(self, label: str, local: sp.spmatrix) -> sp.csr_matrix:
        k = self.position(label)
        factors = [local if i == k else sp.identity(d, format="csr") for i, d in enumerate(self.shape)]
        return reduce(lambda x, y: sp.kron(x, y, format="csr"), factors)

    def annihilation(self, label: str) -> sp.csr_matrix:
        d = self.shape[self.position(label)]
        a = sp.diags(np.sqrt(np.arange(1, d)), 1, shape=(d, d), format="csr", dtype=complex)
        return self._embed(label, a)

    def creation(self, label: str) -> sp.csr_matrix:
        return self.annihilation(label).conj().T.tocsr()

    def operator(self, descriptor: str) -> sp.csr_matrix:
        """Sparse matrix of a product of ladder / number operators.

        ``descriptor`` is a whitespace-separated product, leftmost factor
        first, e.g. ``"adag_S a_S"``, ``"n_S n_A"`` or ``"n_R^2"``.
        """
        tokens = descriptor.split()
        if not tokens:
            return sp.identity(self.dimension, format="csr", dtype=complex)
        out = None
        for tok in tokens:
            m = _TOKEN.match(tok)
            if m is None:
                raise DomainError(f"cannot parse operator token {tok!r}")
            kind, label, power = m.group(1), m.group(2), int(m.group(3) or 1)
            if kind == "a":
                op = self.annihilation(label)
            elif kind == "adag":
                op = self.creation(label)
            else:
                op = sp.diags(self.number(label).astype(complex), format="csr")
            for _ in range(power):
                out = op if out is None else out @ op
        return out.tocsr()

    def basis_vector(self, occupations) -> np.ndarray:
        v = np.zeros(self.dimension, dtype=complex)
        v[self.index(occupations)] = 1.0
        return v

    def product_vector(self, factors: dict[str, np.ndarray]) -> np.ndarray:
        """Tensor product of single-mode amplitude vectors; missing modes are vacuum.

        Factor vectors longer than ``cutoff + 1`` are truncated.
        """
        unknown = set(factors) - set(self.labels)
        if unknown:
            raise DomainError(f"unknown modes {sorted(unknown)}")
        vecs = []
        for label, d in zip(self.labels, self.shape):
            f = np.zeros(d, dtype=complex)
            if label in factors:
                src = np.asarray(factors[label], dtype=complex)[:d]
                f[: src.size] = src
            else:
                f[0] = 1.0
            vecs.append(f)
        return reduce(np.kron, vecs)
