"""Sparse principal subspace estimation over the trace-k Fantope.

Solves  max <S, H> - rho * ||H||_1,1 - (tau/2) * ||H||_F^2  over the
Fantope by operator splitting: an H-block that stays exactly feasible
(every update is a Fantope projection), a Y-block that stays exactly
sparse (entrywise soft-threshold), and a scaled multiplier U gluing them
together.  At a fixed point (step/rho) * U is a subgradient of the l1
term, which is what makes the dual certificate recoverable from the
multiplier for free.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from .base import DEFAULT_POLICY, SupportSet, entry_max_norm, l11_norm
from .errors import GapCollapsed, InfeasibleConstraint, InvalidInput, NotConverged, SearchFailure
from .spectral import FantopePoint, as_sym, fantope_project


# ===== configuration and result types =====

@dataclass(frozen=True)
class SolverConfig:
    """Knobs for the splitting solver; defaults follow the reference tuning."""

    k: int
    rho: float = 0.0
    tau_en: float = 0.0
    admm_step: float = 1.0
    max_iters: int = 20000
    eps_primal: float = 1e-7
    eps_dual: float = 1e-7
    support_tol: float = 1e-6

    def __post_init__(self):
        if int(self.k) != self.k or self.k < 1:
            raise InvalidInput(f"k={self.k} must be a positive integer")
        if self.rho < 0 or self.tau_en < 0:
            raise InvalidInput("rho and tau_en must be non-negative")
        if self.admm_step <= 0:
            raise InvalidInput("admm_step must be positive")
        if int(self.max_iters) != self.max_iters or self.max_iters < 1:
            raise InvalidInput("max_iters must be a positive integer")
        if min(self.eps_primal, self.eps_dual, self.support_tol) <= 0:
            raise InvalidInput("tolerances must be strictly positive")

    def with_(self, **kw):
        return replace(self, **kw)


@dataclass(frozen=True)
class KktReport:
    """Stationarity residuals of a primal-dual pair (all ~0 at an optimum)."""

    sign_mismatch: float
    dual_bound_violation: float
    fantope_optimality_gap: float


@dataclass(frozen=True)
class FpsSolution:
    """Converged primal-dual pair with diagnostics.

    history holds per-iteration objective and residual arrays;
    dual_clip_excess records how far the recovered multiplier poked
    outside [-1, 1] before clipping (0 at a clean optimum).
    """

    H: FantopePoint
    Z: np.ndarray
    objective: float
    support: SupportSet
    iters: int
    primal_residual: float
    dual_residual: float
    kkt: KktReport
    dual_clip_excess: float = 0.0
    history: dict = field(default_factory=dict)


@dataclass(frozen=True)
class UniquenessProbe:
    """Outcome of the two-route uniqueness check."""

    unique: bool
    discrepancy: float
    tau: float
    gap: float


def soft_threshold(a, level):
    """Entrywise shrinkage toward zero by `level` (diagonal included)."""
    return np.sign(a) * np.maximum(np.abs(a) - level, 0.0)


# ===== core splitting loop =====

def _extract_support(h, support_tol, primal_residual):
    # entries below the solver's own resolution are numerical dust, not support
    d = np.diag(h)
    floor = 4.0 * primal_residual
    top = float(np.max(d)) if d.size else 0.0
    cut = max(support_tol * top, floor)
    return SupportSet(tuple(np.nonzero(d > cut)[0]))


def _kkt_arrays(s, h, z, rho, k, support_tol, primal_residual):
    s = np.asarray(s, dtype=float)
    h = np.asarray(h, dtype=float)
    z = np.asarray(z, dtype=float)
    p = s.shape[0]
    off = ~np.eye(p, dtype=bool)

    if rho > 0.0:
        cut = max(support_tol * float(np.max(np.abs(h[off]))) if p > 1 else 0.0,
                  2.0 * primal_residual, 1e-14)
        sig = off & (np.abs(h) > cut)
        sign_mismatch = float(np.max(np.abs(z[sig] - np.sign(h[sig])))) if np.any(sig) else 0.0
    else:
        sign_mismatch = 0.0  # no l1 term, nothing to sign-match

    dual_bound_violation = max(0.0, entry_max_norm(z) - 1.0)

    grad = s - rho * z
    w = np.linalg.eigvalsh(0.5 * (grad + grad.T))
    best = float(np.sum(w[-k:]))
    gap = best - float(np.sum(grad * h))
    return KktReport(
        sign_mismatch=sign_mismatch,
        dual_bound_violation=dual_bound_violation,
        fantope_optimality_gap=gap,
    )


def check_kkt(s, solution, rho, support_tol=1e-6):
    """Stationarity residuals of a solution at penalty level rho.

    sign_mismatch: worst |Z_ij - sign(H_ij)| over significant off-diagonal
    entries of H (entries beneath the solver's primal resolution are not
    sign-classifiable and are skipped); vacuous at rho = 0.
    dual_bound_violation: how far Z pokes outside the unit entrywise box.
    fantope_optimality_gap: how far H is from maximizing <S - rho Z, .>
    over the Fantope (sum of top-k eigenvalues minus the achieved value).
    """
    s = as_sym(s).entries
    h = solution.H.entries
    return _kkt_arrays(
        s, h, solution.Z, float(rho), solution.H.k,
        support_tol=support_tol,
        primal_residual=solution.primal_residual,
    )


def _splitting_loop(s, cfg, tau, warm=None):
    p = s.shape[0]
    k, rho, sigma = cfg.k, cfg.rho, cfg.admm_step
    if k > p:
        raise InvalidInput(f"k={k} exceeds dimension p={p}")
    if warm is None:
        h = (k / p) * np.eye(p)
        y = h.copy()
        u = np.zeros((p, p))
    else:
        h, y, u = (np.array(m, dtype=float) for m in warm)

    scale = np.sqrt(p)
    objs = np.empty(cfg.max_iters)
    r_ps = np.empty(cfg.max_iters)
    r_ds = np.empty(cfg.max_iters)
    converged = False
    stalled = False
    window = 1000
    it = 0
    for it in range(1, cfg.max_iters + 1):
        if tau == 0.0:
            m = y - u + s / sigma
        else:
            m = (s + sigma * (y - u)) / (tau + sigma)
        h = fantope_project(m, k).point.entries
        y_prev = y
        y = soft_threshold(h + u, rho / sigma)
        u = u + h - y
        r_p = float(np.linalg.norm(h - y))
        r_d = float(sigma * np.linalg.norm(y - y_prev))
        obj = float(np.sum(s * h) - rho * np.sum(np.abs(h)) - 0.5 * tau * np.sum(h * h))
        objs[it - 1], r_ps[it - 1], r_ds[it - 1] = obj, r_p, r_d
        if r_p <= cfg.eps_primal * scale and r_d <= cfg.eps_dual * scale:
            converged = True
            break
        # sublinear-progress bail-out: a degenerate penalty (tied optima)
        # makes the iterates drift along the solution face at O(1/t); a
        # linear-rate solve shrinks far more than 0.5% per thousand steps
        if it >= 2 * window and it % window == 0:
            ratios = np.maximum(r_ps[it - window:it] / (cfg.eps_primal * scale),
                                r_ds[it - window:it] / (cfg.eps_dual * scale))
            half = window // 2
            if ratios[half:].min() > 0.995 * ratios[:half].min():
                stalled = True
                break

    history = {
        "objective": objs[:it].copy(),
        "primal_residual": r_ps[:it].copy(),
        "dual_residual": r_ds[:it].copy(),
    }
    return h, y, u, it, r_p, r_d, converged, stalled, history


def _finish_solution(s, cfg, tau, h, u, it, r_p, r_d, converged, stalled, history):
    p = s.shape[0]
    sigma = cfg.admm_step
    if cfg.rho > 0.0:
        z_raw = (sigma / cfg.rho) * u
        z_raw = 0.5 * (z_raw + z_raw.T)
        np.fill_diagonal(z_raw, 0.0)
        clip_excess = max(0.0, entry_max_norm(z_raw) - 1.0)
        z = np.clip(z_raw, -1.0, 1.0)
    else:
        z = np.zeros((p, p))
        clip_excess = 0.0

    point = FantopePoint.from_entries(h, cfg.k, validate=False)
    support = _extract_support(h, cfg.support_tol, r_p)
    objective = float(np.sum(s * h) - cfg.rho * np.sum(np.abs(h)) - 0.5 * tau * np.sum(h * h))
    kkt = _kkt_arrays(s, h, z, cfg.rho, cfg.k, cfg.support_tol, r_p)
    sol = FpsSolution(
        H=point, Z=z, objective=objective, support=support, iters=it,
        primal_residual=r_p, dual_residual=r_d, kkt=kkt,
        dual_clip_excess=clip_excess, history=history,
    )
    if not converged:
        if stalled:
            msg = (f"progress stalled after {it} iterations "
                   f"(primal {r_p:.3e}, dual {r_d:.3e}); the problem is "
                   "likely degenerate at this penalty")
        else:
            msg = (f"splitting solver hit max_iters={cfg.max_iters} "
                   f"(primal {r_p:.3e}, dual {r_d:.3e})")
        raise NotConverged(msg, solution=sol)
    return sol


def _solve_raw(sym, config, tau, warm=None):
    h, y, u, it, r_p, r_d, conv, stall, hist = _splitting_loop(sym, config, tau, warm)
    sol = _finish_solution(sym, config, tau, h, u, it, r_p, r_d, conv, stall, hist)
    return sol, (h, y, u)


def solve_fps(s, config, warm=None):
    """l1-penalized Fantope solve; config.tau_en must be zero here.

    Raises NotConverged (carrying the partial solution) if the iteration
    budget runs out.
    """
    if config.tau_en != 0.0:
        raise InvalidInput("solve_fps is the plain path; use solve_fps_en for tau_en > 0")
    sym = as_sym(s).entries
    sol, _ = _solve_raw(sym, config, 0.0, warm)
    return sol


def solve_fps_en(s, config, warm=None):
    """Elastic-net variant: adds -(tau_en/2)||H||_F^2, strongly concave."""
    if config.tau_en <= 0.0:
        raise InvalidInput("solve_fps_en needs tau_en > 0")
    sym = as_sym(s).entries
    sol, _ = _solve_raw(sym, config, config.tau_en, warm)
    return sol


# ===== constrained form =====

def solve_fps_constrained(s, r_level, config, rel_slack=1e-3, max_doublings=60):
    """Solve max <S,H> subject to ||H||_1,1 <= R by searching the penalty path.

    Monotone search: if the unpenalized solution already satisfies the
    constraint the answer is rho = 0; otherwise bracket a feasible penalty
    by geometric doubling, bisect 40 times, and return the feasible
    candidate with the largest <S, H> seen.  Every solve is warm-started
    from the last converged state.  Returns (solution, rho_star).

    Penalties that sit exactly at a support crossover make the penalized
    problem degenerate and the splitting iteration can stall there; a
    stalled solve still steers the bisection (its H-block is feasible and
    its norm is recorded in the trace) but is never returned.
    """
    sym = as_sym(s).entries
    k = config.k
    if r_level < k:
        raise InfeasibleConstraint(
            f"R={r_level} < k={k}: every Fantope point has ||H||_1,1 >= k"
        )
    budget = r_level * (1.0 + rel_slack)
    base = config.with_(rho=0.0, tau_en=0.0)

    def predictive(sol):
        return float(np.sum(sym * sol.H.entries))

    def attempt(rho_val, warm_state):
        try:
            sol, st = _solve_raw(sym, base.with_(rho=rho_val), 0.0, warm=warm_state)
            return sol, st, True
        except NotConverged as e:
            return e.solution, warm_state, False

    sol0, state = _solve_raw(sym, base, 0.0)
    if l11_norm(sol0.H.entries) <= budget:
        return sol0, 0.0

    trace = [(0.0, l11_norm(sol0.H.entries))]
    candidates = []
    lo = 0.0
    rho = max(entry_max_norm(sym), 1e-12)
    hi = None
    for _ in range(max_doublings):
        sol, state, ok = attempt(rho, state)
        val = l11_norm(sol.H.entries)
        trace.append((rho, val))
        if val <= budget:
            hi = rho
            if ok:
                candidates.append((rho, sol))
            break
        lo = rho
        rho *= 2.0
    if hi is None:
        raise SearchFailure(
            f"no penalty in the doubling range made ||H||_1,1 <= {budget:.6g}",
            trace=trace,
        )

    for _ in range(40):
        if hi - lo <= 1e-12 * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        sol, state, ok = attempt(mid, state)
        val = l11_norm(sol.H.entries)
        trace.append((mid, val))
        if val <= budget:
            hi = mid
            if ok:
                candidates.append((mid, sol))
        else:
            lo = mid

    if not candidates:
        raise SearchFailure(
            "every feasible penalty the search visited stalled before "
            "converging; see the (rho, norm) trace",
            trace=trace,
        )
    best_rho, best_sol = max(candidates, key=lambda c: predictive(c[1]))
    return best_sol, float(best_rho)


# ===== uniqueness probe =====

def uniqueness_probe(s, config, unique_tol=1e-5, policy=DEFAULT_POLICY):
    """Two-route uniqueness check for the penalized solution.

    Solves the plain problem, reads the eigengap of S - rho Z at order k,
    and re-solves with a strongly concave perturbation tau = gap / 2 (any
    tau inside the gap leaves the maximizer unchanged when the solution is
    the unique rank-k projector).  Agreement of the two routes within
    unique_tol certifies uniqueness; a collapsed gap raises GapCollapsed.
    """
    sym = as_sym(s).entries
    p = sym.shape[0]
    sol = solve_fps(sym, config.with_(tau_en=0.0))
    if config.k == p:
        return UniquenessProbe(unique=True, discrepancy=0.0, tau=0.0, gap=float("inf")), sol
    grad = sym - config.rho * sol.Z
    w = np.linalg.eigvalsh(grad)
    gap = float(w[-config.k] - w[-config.k - 1])
    if gap <= policy.gap_tie_tol:
        raise GapCollapsed(
            f"eigengap of S - rho Z at order k={config.k} is {gap:.3e}; "
            "the penalized maximizer is not certifiably unique"
        )
    tau = 0.5 * gap
    sol_en = solve_fps_en(sym, config.with_(tau_en=tau))
    disc = float(np.linalg.norm(sol.H.entries - sol_en.H.entries))
    probe = UniquenessProbe(unique=disc <= unique_tol, discrepancy=disc, tau=tau, gap=gap)
    return probe, sol
