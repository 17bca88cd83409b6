import numpy as np
from scipy import sparse

from ewhmpc.qp import QpProblem, QpSolver, QpSolution, solve_qp
from ..testbase import TestBase

class TestQpSolver(TestBase):
    def test_bound(self):
        # minimize x^2 subject to x >= 1
        p = QpProblem(P=[[2.0]], q=[0.0], A_in=[[1.0]], l_in=[1.0], u_in=[np.inf])
        s = solve_qp(p)
        self.assertEqual(QpSolution.OPTIMAL, s.status)
        self.assertAlmostEqual(1.0, s.x[0], delta=1e-5)
        self.assertAlmostEqual(1.0, s.objective, delta=1e-4)
        self.assertLessEqual(max(s.primal_residual, s.dual_residual, s.complementarity), 1e-6)

    def test_unconstrained(self):
        P = sparse.diags([2.0, 4.0, 1.0])
        q = np.array([-2.0, 4.0, 0.5])
        s = QpSolver().solve(QpProblem(P=P, q=q))
        self.assertTrue(s.is_optimal)
        self.assertArrayAlmostEqual(-q / P.diagonal(), s.x, atol=1e-5)

    def test_equality(self):
        # minimize x1^2 + x2^2 subject to x1 + x2 = 2
        p = QpProblem(P=2 * np.eye(2), q=[0.0, 0.0], A_eq=[[1.0, 1.0]], b_eq=[2.0])
        s = solve_qp(p)
        self.assertTrue(s.is_optimal)
        self.assertArrayAlmostEqual([1.0, 1.0], s.x, atol=1e-5)
        self.assertAlmostEqual(-2.0, s.y[0], delta=1e-4)

    def test_infeasible(self):
        p = QpProblem(P=[[1.0]], q=[0.0], A_in=[[1.0], [1.0]], l_in=[1.0, -np.inf], u_in=[np.inf, 0.0])
        s = solve_qp(p)
        self.assertEqual(QpSolution.INFEASIBLE, s.status)
        self.assertFalse(s.is_optimal)

    def test_max_iterations(self):
        rng = np.random.default_rng(5)
        n = 60
        M = rng.normal(size=(n, n))
        P = M @ M.T * 1e-3 + 1e-6 * np.eye(n)
        A = rng.normal(size=(2 * n, n))
        p = QpProblem(P=P, q=rng.normal(size=n) * 100, A_in=A, l_in=-np.ones(2 * n), u_in=np.ones(2 * n))
        s = QpSolver(max_iter=1, polish=False).solve(p)
        self.assertEqual(QpSolution.MAX_ITERATIONS, s.status)

    def test_warm_start(self):
        p = QpProblem(P=[[2.0]], q=[0.0], A_in=[[1.0]], l_in=[1.0], u_in=[np.inf])
        solver = QpSolver()
        s0 = solver.solve(p)
        s1 = solver.solve(p, x0=s0.x, y0=s0.y)
        self.assertTrue(s1.is_optimal)
        self.assertLessEqual(s1.iterations, s0.iterations)

    def test_get_residuals(self):
        p = QpProblem(P=[[2.0]], q=[0.0], A_in=[[1.0]], l_in=[1.0], u_in=[np.inf])
        solver = QpSolver()
        primal, dual, comp = solver.get_residuals(p, np.array([1.0]), np.array([-2.0]))
        self.assertAlmostEqual(0.0, primal)
        self.assertAlmostEqual(0.0, dual)
        self.assertAlmostEqual(0.0, comp)

        primal, dual, comp = solver.get_residuals(p, np.array([0.5]), np.array([0.0]))
        self.assertAlmostEqual(0.5, primal)
        self.assertAlmostEqual(1.0, dual)

    def test_refine(self):
        p = QpProblem(P=[[2.0]], q=[0.0], A_in=[[1.0]], l_in=[1.0], u_in=[np.inf])
        solver = QpSolver()
        x, y, r = solver.refine(p, np.array([1.001]), np.array([-1.9]))
        self.assertLessEqual(r, 1e-9)
        self.assertAlmostEqual(1.0, x[0], places=9)
        self.assertAlmostEqual(-2.0, y[0], places=9)

    def test_refine_degenerate(self):
        # Linear cost on x1, x2 with a redundant pair of active rows
        P = sparse.diags([0.0, 0.0, 2.0])
        q = np.array([1.0, 2.0, -2.0])
        A_eq = np.array([[1.0, 1.0, 0.0]])
        A_in = np.array([[1.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        p = QpProblem(P=P, q=q, A_eq=A_eq, b_eq=[1.0],
                      A_in=A_in, l_in=[0.0, 0.0, 0.0, 0.0], u_in=[1.0, 1.0, 1.0, 0.5])
        solver = QpSolver()
        x0 = np.array([0.9, 0.1, 0.45])
        y0 = np.zeros(5)
        x, y, r = solver.refine(p, x0, y0)
        self.assertLessEqual(r, 1e-6)
        self.assertArrayAlmostEqual([1.0, 0.0, 0.5], x, atol=1e-6)

        s = solver.solve(p)
        self.assertTrue(s.is_optimal)
        self.assertArrayAlmostEqual([1.0, 0.0, 0.5], s.x, atol=1e-5)

    def test_get_active_set(self):
        solver = QpSolver()
        l = np.array([1.0, -np.inf, 0.0, 2.0])
        u = np.array([1.0, 1.0, np.inf, 3.0])
        ax = np.array([1.0, 1.0, 0.0, 2.5])
        y = np.array([-0.5, 0.3, -0.2, 0.0])
        upper, lower = solver.get_active_set(ax, y, l, u)
        self.assertEqual([True, True, False, False], list(upper))
        self.assertEqual([False, False, True, False], list(lower))
