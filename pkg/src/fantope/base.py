"""Shared primitives: numeric policy, matrix norms, support sets."""

from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidInput


# ===== numeric policy =====

@dataclass(frozen=True)
class Policy:
    """Central record of every tolerance; override per call via `replace`."""

    sym_tol: float = 1e-12          # relative asymmetry allowed in a symmetric matrix
    eig_recon_tol: float = 1e-9     # ||A - V diag(w) V^T||_F budget for eig_sym
    orth_tol: float = 1e-8          # orthonormality residual for eigenvector/basis input
    fantope_eig_tol: float = 1e-8   # eigenvalue box violation allowed in a Fantope point
    fantope_trace_tol: float = 1e-8  # relative trace error allowed in a Fantope point
    waterfill_tol: float = 1e-10    # relative residual of the water-filling equation
    gap_tie_tol: float = 1e-10      # eigengap below which a projector is flagged non-unique
    support_zero_tol: float = 1e-10  # absolute threshold for "this entry is zero"

    def with_(self, **kw):
        return replace(self, **kw)


DEFAULT_POLICY = Policy()


# ===== matrix norms used by the estimator's bounds =====

def entry_max_norm(a):
    """Entrywise max-abs norm ||A||_inf,inf."""
    a = np.asarray(a, dtype=float)
    return float(np.max(np.abs(a))) if a.size else 0.0


def l11_norm(a):
    """Entrywise l1 norm ||A||_1,1 (sum of absolute values, diagonal included)."""
    return float(np.sum(np.abs(np.asarray(a, dtype=float))))


def row_l2_max(a):
    """Max row l2 norm ||A||_2,inf."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.size == 0:
        return 0.0
    return float(np.max(np.sqrt(np.sum(a * a, axis=1))))


def sym_residual(a):
    """max_ij |A_ij - A_ji|, the asymmetry of a square matrix."""
    a = np.asarray(a, dtype=float)
    return float(np.max(np.abs(a - a.T))) if a.size else 0.0


def check_square(a, name="matrix"):
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInput(f"{name} must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise InvalidInput(f"{name} has non-finite entries")
    return a


# ===== support sets =====

@dataclass(frozen=True)
class SupportSet:
    """Sorted, duplicate-free set of row/column indices."""

    indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(set(int(i) for i in self.indices)))
        if any(i < 0 for i in idx):
            raise InvalidInput("support indices must be non-negative")
        object.__setattr__(self, "indices", idx)

    @property
    def size(self):
        return len(self.indices)

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, i):
        return int(i) in set(self.indices)

    def as_array(self):
        return np.asarray(self.indices, dtype=int)

    def complement(self, dim):
        """Indices in range(dim) not in this set."""
        inside = set(self.indices)
        if inside and max(inside) >= dim:
            raise InvalidInput("support index exceeds dimension")
        return SupportSet(tuple(i for i in range(dim) if i not in inside))


def as_support(j):
    """Coerce an iterable of indices (or SupportSet) to a SupportSet."""
    if isinstance(j, SupportSet):
        return j
    return SupportSet(tuple(j))


def support_from_diag(diag, rel_tol):
    """Indices whose diagonal entry exceeds rel_tol * max(diag)."""
    d = np.asarray(diag, dtype=float)
    if d.size == 0:
        return SupportSet(())
    top = float(np.max(d))
    if top <= 0.0:
        return SupportSet(())
    return SupportSet(tuple(np.nonzero(d > rel_tol * top)[0]))
