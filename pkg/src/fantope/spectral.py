"""Dense symmetric eigen-tools and the trace-k Fantope projection.

The Fantope of order k is the set of symmetric matrices H with
0 <= H <= I (in the semidefinite order) and trace(H) = k: the convex
hull of the rank-k orthogonal projectors.  Everything downstream
(the sparse-subspace solver, the certificates) reduces to Euclidean
projection onto this set, which diagonalizes: project the spectrum
onto the simplex-like set {g : 0 <= g_j <= 1, sum g_j = k} by
shifting every eigenvalue down a common water level theta and
clipping to [0, 1].
"""

from dataclasses import dataclass

import numpy as np

from .base import DEFAULT_POLICY, check_square, sym_residual
from .errors import InvalidInput, NumericalFailure


# ===== domain types =====

@dataclass(frozen=True)
class SymMat:
    """A dense symmetric matrix; construction symmetrizes and records the asymmetry."""

    entries: np.ndarray
    asym_residual: float = 0.0

    @classmethod
    def from_array(cls, a):
        a = check_square(a, "SymMat input")
        resid = sym_residual(a)
        ent = 0.5 * (a + a.T)
        ent.flags.writeable = False
        return cls(entries=ent, asym_residual=resid)

    @property
    def dim(self):
        return self.entries.shape[0]


def as_sym(a):
    """Coerce an array (or SymMat) to SymMat."""
    return a if isinstance(a, SymMat) else SymMat.from_array(a)


@dataclass(frozen=True)
class Spectrum:
    """Full eigendecomposition, eigenvalues descending, eigenvectors in columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self):
        return self.eigenvalues.shape[0]

    def reconstruct(self):
        v, w = self.eigenvectors, self.eigenvalues
        return (v * w) @ v.T


@dataclass(frozen=True)
class FantopePoint:
    """A member of the trace-k Fantope, with its certified constraint residual.

    constraint_residual bounds how far `entries` sits from the exact set:
    max of the asymmetry, the eigenvalue-box violation, and |trace - k|.
    """

    dim: int
    k: int
    entries: np.ndarray
    constraint_residual: float

    @classmethod
    def from_entries(cls, entries, k, policy=DEFAULT_POLICY, validate=True):
        a = check_square(entries, "Fantope point")
        p = a.shape[0]
        _check_order(k, p)
        sresid = sym_residual(a)
        sym = 0.5 * (a + a.T)
        try:
            w = np.linalg.eigvalsh(sym)
        except np.linalg.LinAlgError as e:
            raise NumericalFailure(f"eigvalsh failed on Fantope candidate: {e}")
        box = max(max(0.0, -float(w.min())), max(0.0, float(w.max()) - 1.0))
        tr = abs(float(np.sum(w)) - k)
        resid = max(sresid, box, tr)
        if validate:
            if box > policy.fantope_eig_tol:
                raise InvalidInput(f"eigenvalues outside [0,1] by {box:.3e}")
            if tr > policy.fantope_trace_tol * max(k, 1):
                raise InvalidInput(f"trace off by {tr:.3e} from k={k}")
        sym.flags.writeable = False
        return cls(dim=p, k=int(k), entries=sym, constraint_residual=resid)


@dataclass(frozen=True)
class FantopeProjectionResult:
    """Output of fantope_project: the point, the water level, and the spectra."""

    point: FantopePoint
    theta: float
    spectrum: Spectrum       # spectrum of the input matrix
    gamma_plus: np.ndarray   # clipped eigenvalues of the projection, descending


# ===== operations =====

def _check_order(k, p):
    if int(k) != k or not (1 <= int(k) <= p):
        raise InvalidInput(f"subspace order k={k} must be an integer in [1, {p}]")


def eig_sym(a):
    """Full eigendecomposition of a symmetric matrix, eigenvalues descending."""
    s = as_sym(a)
    try:
        w, v = np.linalg.eigh(s.entries)
    except np.linalg.LinAlgError as e:
        raise NumericalFailure(f"dense symmetric eigensolver failed: {e}")
    w = np.ascontiguousarray(w[::-1])
    v = np.ascontiguousarray(v[:, ::-1])
    w.flags.writeable = False
    v.flags.writeable = False
    return Spectrum(eigenvalues=w, eigenvectors=v)


def _water_level(gamma, k):
    """Solve sum_j clip(gamma_j - theta, 0, 1) = k for theta by breakpoint scan.

    phi(theta) = sum_j clip(gamma_j - theta, 0, 1) is continuous, piecewise
    linear, non-increasing, with kinks only at gamma_j and gamma_j - 1; so the
    equation is solved exactly by scanning the sorted kinks and interpolating
    on the one segment where phi crosses k.
    """
    if k == gamma.shape[0]:
        # every clipped eigenvalue must saturate at 1
        return float(gamma.min()) - 1.0
    cands = np.unique(np.concatenate([gamma, gamma - 1.0]))  # ascending
    phis = np.clip(gamma[None, :] - cands[:, None], 0.0, 1.0).sum(axis=1)
    # phi(cands[0]) = p >= k and phi(cands[-1]) = 0 < k, so a crossing exists;
    # the comparison is slackened because phi near a kink rounds at ~p*eps
    above = np.nonzero(phis >= k - 1e-9 * k)[0]
    if above.size == 0:
        raise NumericalFailure("water-level scan found no feasible segment")
    i = int(above[-1])
    if i == len(cands) - 1 or phis[i] == k:
        return float(cands[i])
    # phis[i] ~>= k > phis[i+1]: strict drop, linear on the segment
    frac = (phis[i] - k) / (phis[i] - phis[i + 1])
    return float(cands[i] + frac * (cands[i + 1] - cands[i]))


def fantope_project(a, k, policy=DEFAULT_POLICY):
    """Euclidean projection of a symmetric matrix onto the trace-k Fantope.

    Diagonalizes the input and water-fills the spectrum: the projection is
    sum_j clip(gamma_j - theta, 0, 1) v_j v_j^T with theta chosen so the
    clipped eigenvalues sum to k.

    Returns a FantopeProjectionResult; its point carries the constraint
    residual certified from the constructed spectrum.
    """
    s = as_sym(a)
    p = s.dim
    _check_order(k, p)
    spec = eig_sym(s)
    gamma = spec.eigenvalues
    theta = _water_level(gamma, k)
    gplus = np.clip(gamma - theta, 0.0, 1.0)
    # one Newton correction on the active linear segment mops up roundoff
    resid = float(gplus.sum()) - k
    active = (gplus > 0.0) & (gplus < 1.0)
    if resid != 0.0 and np.any(active):
        theta += resid / int(active.sum())
        gplus = np.clip(gamma - theta, 0.0, 1.0)
    v = spec.eigenvectors
    ent = (v * gplus) @ v.T
    ent = 0.5 * (ent + ent.T)
    ent.flags.writeable = False
    point = FantopePoint(
        dim=p, k=int(k), entries=ent,
        constraint_residual=abs(float(gplus.sum()) - k),
    )
    order = np.argsort(gplus)[::-1]
    return FantopeProjectionResult(
        point=point, theta=float(theta), spectrum=spec,
        gamma_plus=np.ascontiguousarray(gplus[order]),
    )


def top_k_projector(a, k, policy=DEFAULT_POLICY):
    """Orthogonal projector onto the span of the top-k eigenvectors.

    Returns (point, gap) where gap = gamma_k - gamma_{k+1}; the projector is
    the unique Fantope maximizer of <A, H> iff gap > 0, so a gap at or below
    policy.gap_tie_tol flags a tie.  gap is +inf when k = p.
    """
    s = as_sym(a)
    p = s.dim
    _check_order(k, p)
    spec = eig_sym(s)
    w, v = spec.eigenvalues, spec.eigenvectors
    vk = v[:, :k]
    ent = vk @ vk.T
    ent = 0.5 * (ent + ent.T)
    ent.flags.writeable = False
    gap = float("inf") if k == p else float(w[k - 1] - w[k])
    point = FantopePoint(
        dim=p, k=int(k), entries=ent,
        constraint_residual=abs(float(np.trace(ent)) - k),
    )
    return point, gap


def procrustes_align(u, v, policy=DEFAULT_POLICY):
    """Best orthogonal alignment of two orthonormal k-frames.

    Returns (omega, dist): the k x k orthogonal matrix minimizing
    ||u - v @ omega||_F and the achieved distance.  The minimum never
    exceeds the Frobenius distance between the two spanned projectors,
    ||u u^T - v v^T||_F.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.ndim != 2 or v.ndim != 2 or u.shape != v.shape:
        raise InvalidInput(f"frames must share a p x k shape, got {u.shape} vs {v.shape}")
    if not (np.all(np.isfinite(u)) and np.all(np.isfinite(v))):
        raise InvalidInput("frame has non-finite entries")
    kk = u.shape[1]
    for name, f in (("first", u), ("second", v)):
        err = np.max(np.abs(f.T @ f - np.eye(kk))) if kk else 0.0
        if err > policy.orth_tol:
            raise InvalidInput(f"{name} frame is not orthonormal (residual {err:.3e})")
    try:
        pmat, _, qt = np.linalg.svd(v.T @ u)
    except np.linalg.LinAlgError as e:
        raise NumericalFailure(f"svd failed in frame alignment: {e}")
    omega = pmat @ qt
    dist = float(np.linalg.norm(u - v @ omega))
    return omega, dist
