"""Independent reference routes used to freeze expected values in tests.

Everything here deliberately avoids the package's own algorithms: scalar
bisection instead of breakpoint scans, dense grids instead of ADMM,
exhaustive enumeration instead of algebraic shortcuts.
"""

import numpy as np


def waterfill_theta_bisect(gamma, k, iters=200):
    """Water level by plain bisection on phi(theta) = sum clip(gamma-theta,0,1)."""
    gamma = np.asarray(gamma, dtype=float)
    lo = float(gamma.min()) - 1.0   # phi = p >= k
    hi = float(gamma.max())         # phi = 0 < k
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if np.clip(gamma - mid, 0.0, 1.0).sum() >= k:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def random_feasible_point(rng, p, k, max_tries=1000):
    """A Fantope member built directly: random basis, rescaled box spectrum."""
    g = None
    for _ in range(max_tries):
        cand = rng.uniform(0.0, 1.0, size=p)
        cand *= k / cand.sum()
        if cand.max() <= 1.0:
            g = cand
            break
    if g is None:
        # fall back to a flat spectrum, always feasible
        g = np.full(p, k / p)
    q, _ = np.linalg.qr(rng.normal(size=(p, p)))
    h = (q * g) @ q.T
    return 0.5 * (h + h.T)


def penalized_objective(s, h, rho):
    """<S, H> - rho * ||H||_1,1."""
    s = np.asarray(s, dtype=float)
    h = np.asarray(h, dtype=float)
    return float(np.sum(s * h) - rho * np.sum(np.abs(h)))


def grid_solve_2x2(s, rho, res=1e-3):
    """Dense grid maximization of the penalized objective on the 2x2 Fantope, k=1.

    Every trace-1 symmetric 2x2 H is [[a, c], [c, 1-a]]; it lies in the
    Fantope iff (a - 1/2)^2 + c^2 <= 1/4.  Returns (best_objective, best_H).
    """
    s = np.asarray(s, dtype=float)
    a = np.arange(0.0, 1.0 + res / 2, res)
    c = np.arange(-0.5, 0.5 + res / 2, res)
    aa, cc = np.meshgrid(a, c, indexing="ij")
    feas = (aa - 0.5) ** 2 + cc**2 <= 0.25 + 1e-15
    obj = (
        s[0, 0] * aa + s[1, 1] * (1.0 - aa) + 2.0 * s[0, 1] * cc
        - rho * (np.abs(aa) + np.abs(1.0 - aa) + 2.0 * np.abs(cc))
    )
    obj = np.where(feas, obj, -np.inf)
    idx = np.unravel_index(np.argmax(obj), obj.shape)
    best_h = np.array([
        [aa[idx], cc[idx]],
        [cc[idx], 1.0 - aa[idx]],
    ])
    return float(obj[idx]), best_h


def sign_rank_one_bruteforce(m, zero_tol=0.0):
    """Is sign(M) == b b^T for some sign vector b?  Exhaustive over 2^s.

    Any zero entry (|entry| <= zero_tol) disqualifies the pattern, matching
    the strict reading used by the diagnostics.
    """
    m = np.asarray(m, dtype=float)
    sgn = np.sign(m)
    if np.any(np.abs(m) <= zero_tol):
        return False
    s = m.shape[0]
    for bits in range(2 ** (s - 1)):
        b = np.ones(s)
        for j in range(1, s):
            if (bits >> (j - 1)) & 1:
                b[j] = -1.0
        if np.array_equal(sgn, np.outer(b, b)):
            return True
    return False


def grid_solve_2x2_zoom(s, rho, coarse=1e-3, fine=2e-5):
    """Two-stage dense grid maximization on the 2x2 Fantope, k=1.

    A coarse full-domain pass locates the basin; the objective is concave
    on a convex set, so the true maximizer lies within one coarse step of
    the coarse argmax and a local fine grid around it is exhaustive.
    """
    s = np.asarray(s, dtype=float)
    _, h0 = grid_solve_2x2(s, rho, res=coarse)
    a0, c0 = h0[0, 0], h0[0, 1]
    pad = 3.0 * coarse
    a = np.arange(max(0.0, a0 - pad), min(1.0, a0 + pad) + fine / 2, fine)
    c = np.arange(max(-0.5, c0 - pad), min(0.5, c0 + pad) + fine / 2, fine)
    aa, cc = np.meshgrid(a, c, indexing="ij")
    feas = (aa - 0.5) ** 2 + cc**2 <= 0.25 + 1e-15
    obj = (
        s[0, 0] * aa + s[1, 1] * (1.0 - aa) + 2.0 * s[0, 1] * cc
        - rho * (np.abs(aa) + np.abs(1.0 - aa) + 2.0 * np.abs(cc))
    )
    obj = np.where(feas, obj, -np.inf)
    idx = np.unravel_index(np.argmax(obj), obj.shape)
    best_h = np.array([
        [aa[idx], cc[idx]],
        [cc[idx], 1.0 - aa[idx]],
    ])
    return float(obj[idx]), best_h
