import time
import numpy as np
from scipy import sparse
from scipy.sparse.linalg import splu
import osqp

from .setup_logger import logger
from .qpsolution import QpSolution

class QpSolver():
    """
    Operator-splitting QP solver backed by OSQP. A new OSQP workspace is set
    up for every problem. OSQP stops at the looser tolerance `eps`, the
    reported status is decided by the residuals recomputed here, so
    `optimal` always means all three residuals are within `tol`.

    When OSQP converges but its solution (polished or not) misses `tol`, the
    active set read off the primal-dual pair is refined by solving the
    equality-constrained KKT system of the active constraints, until the
    active set stops changing. The refined pair is only accepted if it
    passes the same residual check.
    """

    SOLVED = ['solved', 'solved inaccurate']
    MAX_ITERATIONS = ['maximum iterations reached', 'run time limit reached']

    def __init__(self, tol=1e-6, max_iter=20000, polish=True, eps=1e-5, refine_iter=25, orig=None):
        if not isinstance(orig, QpSolver):
            self.tol = tol
            self.max_iter = max_iter
            self.polish = polish
            self.eps = eps
            self.refine_iter = refine_iter
        else:
            self.tol = orig.tol
            self.max_iter = orig.max_iter
            self.polish = orig.polish
            self.eps = orig.eps
            self.refine_iter = orig.refine_iter

        # KKT regularization and iterative refinement steps of the active-set solve
        self.kkt_delta = 1e-9
        self.kkt_refine_steps = 10

    def get_residuals(self, problem, x, y):
        """
        Return the primal violation, the stationarity residual and the
        complementarity residual (min-function form) of a primal-dual pair
        of the stacked problem l <= A x <= u.
        """

        A, l, u = problem.get_osqp_data()
        ax = A @ x

        primal = 0.0
        if ax.size > 0:
            primal = float(max(np.max(l - ax), np.max(ax - u), 0.0))

        grad = problem.P @ x + problem.q + A.T @ y
        dual = float(np.max(np.abs(grad))) if grad.size > 0 else 0.0

        comp = 0.0
        if ax.size > 0:
            y_up, y_lo = np.maximum(y, 0.0), np.maximum(-y, 0.0)
            gap_up = np.maximum(u - ax, 0.0)
            gap_lo = np.maximum(ax - l, 0.0)
            comp = float(np.max(np.maximum(np.minimum(y_up, gap_up), np.minimum(y_lo, gap_lo))))

        return primal, dual, comp

    #region Active-set refinement

    def get_active_set(self, ax, y, l, u):
        """
        Primal-dual active set estimate: a row is active at its upper bound
        when y + (Ax - u) > 0 and at its lower bound when y + (Ax - l) < 0.
        Equality rows are always active.
        """

        eq = l == u
        with np.errstate(invalid='ignore'):
            upper = eq | (y + (ax - u) > 0)
            lower = ~upper & (y + (ax - l) < 0)
        return upper, lower

    def solve_kkt(self, problem, A, upper, lower, l, u):
        n = problem.size
        idx = np.flatnonzero(upper | lower)
        A_act = A[idx]
        b_act = np.where(upper[idx], u[idx], l[idx])

        if idx.size > 0:
            K = sparse.bmat([[problem.P, A_act.T], [A_act, None]], format='csc')
        else:
            K = sparse.csc_matrix(problem.P)
        reg = np.concatenate([np.full(n, self.kkt_delta), np.full(idx.size, -self.kkt_delta)])
        rhs = np.concatenate([-problem.q, b_act])

        lu = splu(sparse.csc_matrix(K + sparse.diags(reg)))
        z = lu.solve(rhs)
        for _ in range(self.kkt_refine_steps):
            z += lu.solve(rhs - K @ z)

        x = z[:n]
        y = np.zeros(A.shape[0])
        y[idx] = z[n:]
        return x, y

    def refine(self, problem, x, y):
        """
        Refine a primal-dual pair with a primal-dual active-set iteration
        started from the active set of the pair. Returns the pair with the
        smallest residual found, the input pair included.
        """

        A, l, u = problem.get_osqp_data()
        best = (x, y, max(self.get_residuals(problem, x, y)))
        if A.shape[0] == 0:
            return best
        A = A.tocsr()

        upper, lower = self.get_active_set(A @ x, y, l, u)
        for i in range(self.refine_iter):
            try:
                xr, yr = self.solve_kkt(problem, A, upper, lower, l, u)
            except RuntimeError as ex:
                logger.debug(f'Active-set KKT solve failed: {ex}')
                break
            if not (np.all(np.isfinite(xr)) and np.all(np.isfinite(yr))):
                break

            r = max(self.get_residuals(problem, xr, yr))
            if r < best[2]:
                best = (xr, yr, r)
            if r <= self.tol:
                break

            new_upper, new_lower = self.get_active_set(A @ xr, yr, l, u)
            if np.array_equal(new_upper, upper) and np.array_equal(new_lower, lower):
                break
            upper, lower = new_upper, new_lower

        return best

    #endregion

    def solve(self, problem, x0=None, y0=None):
        """
        Solve `problem`, optionally warm-started from a primal (and dual) guess.

        Parameters
        ----------
        problem : QpProblem
        x0 : array, optional
            Initial primal iterate.
        y0 : array, optional
            Initial multipliers of the stacked constraints.

        Returns
        -------
        QpSolution
        """

        A, l, u = problem.get_osqp_data()
        if A.shape[0] == 0:
            # OSQP requires at least one constraint row
            A = sparse.csc_matrix(([1.0], ([0], [0])), shape=(1, problem.size))
            l, u = np.array([-np.inf]), np.array([np.inf])

        P = sparse.triu(problem.P, format='csc')

        start = time.perf_counter()
        prob = osqp.OSQP()
        prob.setup(P=P, q=problem.q, A=A, l=l, u=u,
                   eps_abs=self.eps, eps_rel=self.eps,
                   max_iter=self.max_iter, polish=self.polish, polish_refine_iter=5,
                   adaptive_rho_interval=25,
                   warm_start=True, verbose=False)
        if x0 is not None:
            if y0 is not None and len(y0) == A.shape[0]:
                prob.warm_start(x=x0, y=y0)
            else:
                prob.warm_start(x=x0)
        res = prob.solve()

        solver_status = res.info.status
        x = res.x if res.x is not None else np.full(problem.size, np.nan)
        y = res.y if res.y is not None else np.full(A.shape[0], np.nan)
        y = y[:problem.b_eq.size + problem.l_in.size]

        finite = np.all(np.isfinite(x)) and np.all(np.isfinite(y))
        if finite:
            primal, dual, comp = self.get_residuals(problem, x, y)
        else:
            primal, dual, comp = np.inf, np.inf, np.inf

        refined = False
        if self.polish and finite and solver_status in QpSolver.SOLVED and max(primal, dual, comp) > self.tol:
            x, y, _ = self.refine(problem, x, y)
            primal, dual, comp = self.get_residuals(problem, x, y)
            refined = True
        solve_time = time.perf_counter() - start

        objective = problem.objective(x) if finite else np.nan

        if solver_status in QpSolver.SOLVED:
            if max(primal, dual, comp) <= self.tol:
                status = QpSolution.OPTIMAL
            else:
                status = QpSolution.INACCURATE
        elif solver_status in QpSolver.MAX_ITERATIONS:
            status = QpSolution.MAX_ITERATIONS
        else:
            status = QpSolution.INFEASIBLE

        logger.debug(f'QP of size {problem.size} finished with `{solver_status}` in {res.info.iter} iterations'
                     f'{", refined" if refined else ""}, residuals {primal:.2e} {dual:.2e} {comp:.2e}.')

        return QpSolution(x=x, y=y, objective=objective, status=status,
                          primal_residual=primal, dual_residual=dual, complementarity=comp,
                          iterations=int(res.info.iter), solve_time=solve_time,
                          solver_status=solver_status)

def solve_qp(problem, tol=1e-6, max_iter=20000, x0=None):
    return QpSolver(tol=tol, max_iter=max_iter).solve(problem, x0=x0)
