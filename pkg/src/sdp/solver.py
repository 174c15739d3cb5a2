"""Primal-dual interior-point method for block-diagonal SDPs

Infeasible-start path following with Nesterov-Todd scaling and a Mehrotra
predictor-corrector step. Each iteration factors the m x m Schur
complement M_kl = <A_k, W A_l W> once and reuses it for both the
predictor and the corrector direction.
"""

import logging
import timeit
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from ..config import SolverConfig
from .problem import SdpProblem, SdpSolution, SolverStatus

logger = logging.getLogger(__name__)

_HEADER = "| iter |      pcost |      dcost |     pres |     dres |      gap |       mu |  alpha_p |  alpha_d |     time |"
_SEPARA = "|------|------------|------------|----------|----------|----------|----------|----------|----------|----------|"
_EPS = 1e-15
STALL_STEP = 1e-10
STALL_LIMIT = 5

Blocks = List[np.ndarray]


def _sym(x: np.ndarray) -> np.ndarray:
    return (x + x.T) / 2


def _inner(xs: Sequence[np.ndarray], zs: Sequence[np.ndarray]) -> float:
    return float(sum(np.vdot(x, z).real for x, z in zip(xs, zs)))


def _frobenius(xs: Sequence[np.ndarray]) -> float:
    return float(np.sqrt(sum(np.sum(x * x) for x in xs)))


def _factor(x: np.ndarray) -> np.ndarray:
    """Any L with x = L L^T; Cholesky first, eigen-factor when x is nearly singular"""
    try:
        return np.linalg.cholesky(x)
    except np.linalg.LinAlgError:
        eigenvalues, vectors = np.linalg.eigh(_sym(x))
        floor = _EPS * max(1.0, float(np.max(np.abs(eigenvalues))))
        return vectors * np.sqrt(np.maximum(eigenvalues, floor))


class _NtScaling:
    """Nesterov-Todd scaling of one block: G^T Z G = G^{-1} X G^{-T} = diag(lam)"""

    def __init__(self, x: np.ndarray, z: np.ndarray):
        lx, lz = _factor(x), _factor(z)
        u, lam, vt = np.linalg.svd(lz.T @ lx)
        lam = np.maximum(lam, _EPS)
        root = np.sqrt(lam)
        self.lam = lam
        self.g = (lx @ vt.T) / root
        self.ginv = (u / root).T @ lz.T
        self.w = self.g @ self.g.T

    def scale_x(self, dx: np.ndarray) -> np.ndarray:
        return self.ginv @ dx @ self.ginv.T

    def scale_z(self, dz: np.ndarray) -> np.ndarray:
        return self.g.T @ dz @ self.g

    def unscale(self, r: np.ndarray) -> np.ndarray:
        return self.g @ r @ self.g.T

    def max_step(self, scaled: np.ndarray) -> float:
        """Largest alpha with diag(lam) + alpha * scaled still PSD"""
        inv_root = 1.0 / np.sqrt(self.lam)
        lowest = np.linalg.eigvalsh(_sym(scaled * np.outer(inv_root, inv_root)))[0]
        return np.inf if lowest >= 0.0 else -1.0 / lowest


class InteriorPointSolver:
    """
    Solves min <C, X> s.t. A(X) = b, X >= 0 together with its dual.

    The solver never raises on numerical trouble; the status of the
    returned SdpSolution says how the run ended and the last iterate is
    always attached.
    """

    def __init__(self, config: Optional[SolverConfig] = None):
        self.config = config or SolverConfig()

    def solve(self, problem: SdpProblem) -> SdpSolution:
        cfg = self.config
        start_time = timeit.default_timer()
        b = problem.rhs
        c = list(problem.objective)
        b_norm = float(np.linalg.norm(b))
        c_norm = _frobenius(c)

        x = [(1.0 + b_norm) * np.eye(s) for s in problem.sides]
        z = [(1.0 + c_norm) * np.eye(s) for s in problem.sides]
        y = np.zeros(problem.num_constraints)

        stats: List[Dict[str, Any]] = []
        stalled = 0
        status = SolverStatus.MAX_ITERATIONS
        message = f"Reached {cfg.max_iter} iterations without convergence"
        iteration = 0
        self._log_header()

        for iteration in range(cfg.max_iter + 1):
            rp = b - problem.apply(x)
            aty = problem.adjoint(y)
            rd = [ci - zi - ai for ci, zi, ai in zip(c, z, aty)]
            pobj = problem.objective_value(x)
            dobj = float(b @ y)
            pres = float(np.linalg.norm(rp)) / (1.0 + b_norm)
            dres = _frobenius(rd) / (1.0 + c_norm)
            gap = abs(pobj - dobj)
            mu = _inner(x, z) / problem.cone_order

            stats_i: Dict[str, Any] = {
                "iter": iteration, "pcost": pobj, "dcost": dobj, "pres": pres,
                "dres": dres, "gap": gap, "mu": mu,
                "alpha_p": stats[-1]["step_p"] if stats else 0.0,
                "alpha_d": stats[-1]["step_d"] if stats else 0.0,
                "time": timeit.default_timer() - start_time,
            }

            if not all(np.isfinite(v) for v in (pobj, dobj, pres, dres, mu)):
                status, message = SolverStatus.NUMERICAL_FAILURE, "Non-finite iterate"
                stats.append(stats_i)
                break

            verdict = self._check_termination(problem, x, y, rp, rd, pobj, dobj, pres, dres, gap)
            stats_i["status"] = verdict[0]
            self._log_iteration(stats_i)
            if verdict[0] is not None:
                status, message = verdict
                stats.append(stats_i)
                break
            if iteration == cfg.max_iter:
                stats.append(stats_i)
                break

            try:
                dx, dy, dz, alpha_p, alpha_d, sigma = self._step(problem, x, z, rp, rd, mu)
            except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as e:
                logger.warning("Schur complement factorization failed at iteration %d: %s", iteration, e)
                status, message = SolverStatus.NUMERICAL_FAILURE, f"Schur complement not positive definite: {e}"
                stats.append(stats_i)
                break

            stats_i.update({"sigma": sigma, "step_p": alpha_p, "step_d": alpha_d})
            stats.append(stats_i)

            if max(alpha_p, alpha_d) < STALL_STEP:
                stalled += 1
                if stalled >= STALL_LIMIT:
                    logger.warning("Interior-point steps stalled at iteration %d (mu=%.3e)", iteration, mu)
                    status, message = SolverStatus.NUMERICAL_FAILURE, "Step lengths stalled"
                    break
            else:
                stalled = 0

            x = [_sym(xi + alpha_p * dxi) for xi, dxi in zip(x, dx)]
            z = [_sym(zi + alpha_d * dzi) for zi, dzi in zip(z, dz)]
            y = y + alpha_d * dy

        self._log_footer(message)
        if status is not SolverStatus.OPTIMAL:
            logger.info("SDP solve ended with %s after %d iterations: %s", status.value, iteration, message)

        last = stats[-1] if stats else {}
        return SdpSolution(
            status=status,
            x=x,
            y=y,
            z=z,
            primal_objective=float(last.get("pcost", np.nan)),
            dual_objective=float(last.get("dcost", np.nan)),
            gap=float(last.get("gap", np.nan)),
            primal_residual=float(last.get("pres", np.nan)),
            dual_residual=float(last.get("dres", np.nan)),
            iterations=iteration,
            message=message,
            stats=stats,
        )

    def _check_termination(
        self,
        problem: SdpProblem,
        x: Blocks,
        y: np.ndarray,
        rp: np.ndarray,
        rd: Blocks,
        pobj: float,
        dobj: float,
        pres: float,
        dres: float,
        gap: float,
    ) -> Tuple[Optional[SolverStatus], str]:
        cfg = self.config
        feasible = pres <= cfg.feas_tol and dres <= cfg.feas_tol
        if feasible and gap <= cfg.gap_tol * (1.0 + abs(pobj)):
            return SolverStatus.OPTIMAL, "Optimal solution found"

        # pobj - dobj = <X, Z> + <Rd, X> - rp.y with <X, Z> >= 0
        slack = abs(_inner(rd, x)) + abs(float(rp @ y)) + cfg.gap_tol * (1.0 + abs(pobj))
        if feasible and dobj - pobj > slack:
            return SolverStatus.NUMERICAL_FAILURE, (
                f"Weak duality violated: dual {dobj:.6e} exceeds primal {pobj:.6e}"
            )

        # Dual ray: b.y > 0 with A^T y + Z = C - Rd vanishing relative to it
        if dobj > _EPS:
            ray = _frobenius([ci - ri for ci, ri in zip(problem.objective, rd)])
            if ray / dobj <= cfg.infeas_tol:
                return SolverStatus.INFEASIBLE, "Primal infeasible: dual objective unbounded along a feasible ray"
        # Primal ray: <C, X> < 0 with A(X) = b - rp vanishing relative to it
        if pobj < -_EPS:
            ray = float(np.linalg.norm(problem.rhs - rp))
            if ray / abs(pobj) <= cfg.infeas_tol:
                return SolverStatus.INFEASIBLE, "Dual infeasible: primal objective unbounded along a feasible ray"
        return None, ""

    def _step(
        self,
        problem: SdpProblem,
        x: Blocks,
        z: Blocks,
        rp: np.ndarray,
        rd: Blocks,
        mu: float,
    ) -> Tuple[Blocks, np.ndarray, Blocks, float, float, float]:
        """Mehrotra predictor-corrector direction and step lengths"""
        scalings = [_NtScaling(xi, zi) for xi, zi in zip(x, z)]
        schur = problem.schur_complement([s.w for s in scalings])
        factor = self._factor_schur(schur)
        wrdw = [s.w @ r @ s.w for s, r in zip(scalings, rd)]

        def direction(scaled_rhs: List[np.ndarray]) -> Tuple[Blocks, np.ndarray, Blocks]:
            rc = [s.unscale(r) for s, r in zip(scalings, scaled_rhs)]
            dy = scipy.linalg.cho_solve(factor, rp - problem.apply([a - w for a, w in zip(rc, wrdw)]))
            aty = problem.adjoint(dy)
            dz = [r - a for r, a in zip(rd, aty)]
            dx = [_sym(r - s.w @ d @ s.w) for r, s, d in zip(rc, scalings, dz)]
            return dx, dy, dz

        def step_lengths(dx: Blocks, dz: Blocks) -> Tuple[Blocks, Blocks, float, float]:
            dxs = [s.scale_x(d) for s, d in zip(scalings, dx)]
            dzs = [s.scale_z(d) for s, d in zip(scalings, dz)]
            max_p = min(s.max_step(d) for s, d in zip(scalings, dxs))
            max_d = min(s.max_step(d) for s, d in zip(scalings, dzs))
            return dxs, dzs, max_p, max_d

        # Predictor
        dx_a, _, dz_a = direction([-np.diag(s.lam) for s in scalings])
        dxs_a, dzs_a, max_p, max_d = step_lengths(dx_a, dz_a)
        ap, ad = min(1.0, max_p), min(1.0, max_d)
        mu_aff = _inner(
            [xi + ap * d for xi, d in zip(x, dx_a)],
            [zi + ad * d for zi, d in zip(z, dz_a)],
        ) / problem.cone_order
        sigma = float(np.clip((mu_aff / max(mu, _EPS)) ** 3, 0.0, 1.0))

        # Corrector
        corrected = []
        for s, dxs, dzs in zip(scalings, dxs_a, dzs_a):
            cross = _sym(dxs @ dzs)
            lyapunov = 2.0 * cross / (s.lam[:, None] + s.lam[None, :])
            corrected.append(np.diag(sigma * mu / s.lam - s.lam) - lyapunov)
        dx, dy, dz = direction(corrected)
        _, _, max_p, max_d = step_lengths(dx, dz)

        frac = self.config.step_fraction
        alpha_p = min(1.0, frac * max_p)
        alpha_d = min(1.0, frac * max_d)
        return dx, dy, dz, alpha_p, alpha_d, sigma

    @staticmethod
    def _factor_schur(schur: np.ndarray):
        try:
            return scipy.linalg.cho_factor(schur, lower=True, check_finite=True)
        except scipy.linalg.LinAlgError:
            shift = 1e-13 * max(1.0, float(np.max(np.abs(np.diag(schur)))))
            logger.debug("Regularizing Schur complement by %.3e", shift)
            return scipy.linalg.cho_factor(schur + shift * np.eye(schur.shape[0]), lower=True)

    def _log_header(self):
        if self.config.verbose:
            print(f"{_SEPARA}\n{_HEADER}\n{_SEPARA}")

    def _log_iteration(self, stats_i: Dict[str, Any]):
        if not self.config.verbose:
            return
        print(
            f"| {stats_i['iter']:>4} | {stats_i['pcost']:>10.3e} |"
            f" {stats_i['dcost']:>10.3e} | {stats_i['pres']:>8.2e} |"
            f" {stats_i['dres']:>8.2e} | {stats_i['gap']:>8.2e} |"
            f" {stats_i['mu']:>8.2e} | {stats_i['alpha_p']:>8.2e} |"
            f" {stats_i['alpha_d']:>8.2e} | {stats_i['time']:>8.2e} |"
        )

    def _log_footer(self, message: str):
        if self.config.verbose:
            print(f"{_SEPARA}\n| {message}")


def solve(problem: SdpProblem, config: Optional[SolverConfig] = None) -> SdpSolution:
    """Solve an SDP with a fresh solver instance"""
    return InteriorPointSolver(config).solve(problem)
