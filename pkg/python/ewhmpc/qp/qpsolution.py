class QpSolution():
    """
    Result of a QP solve. The residuals are recomputed from the returned
    primal-dual pair, independently of the solver's own termination test.
    """

    OPTIMAL = 'optimal'
    INACCURATE = 'inaccurate'
    MAX_ITERATIONS = 'max-iterations'
    INFEASIBLE = 'infeasible'

    def __init__(self, x=None, y=None, objective=None, status=None,
                 primal_residual=None, dual_residual=None, complementarity=None,
                 iterations=None, solve_time=None, solver_status=None,
                 orig=None):

        if not isinstance(orig, QpSolution):
            self.x = x                                  # Primal vector
            self.y = y                                  # Multipliers of the stacked constraints
            self.objective = objective
            self.status = status
            self.primal_residual = primal_residual      # Max constraint violation
            self.dual_residual = dual_residual          # Max stationarity violation
            self.complementarity = complementarity      # Max complementarity violation
            self.iterations = iterations
            self.solve_time = solve_time                # s, wall clock
            self.solver_status = solver_status          # Status string of the backend
        else:
            self.x = x if x is not None else orig.x
            self.y = y if y is not None else orig.y
            self.objective = objective if objective is not None else orig.objective
            self.status = status if status is not None else orig.status
            self.primal_residual = primal_residual if primal_residual is not None else orig.primal_residual
            self.dual_residual = dual_residual if dual_residual is not None else orig.dual_residual
            self.complementarity = complementarity if complementarity is not None else orig.complementarity
            self.iterations = iterations if iterations is not None else orig.iterations
            self.solve_time = solve_time if solve_time is not None else orig.solve_time
            self.solver_status = solver_status if solver_status is not None else orig.solver_status

    @property
    def is_optimal(self):
        return self.status == QpSolution.OPTIMAL

    def to_dict(self):
        return {
            'status': self.status,
            'objective': self.objective,
            'primal_residual': self.primal_residual,
            'dual_residual': self.dual_residual,
            'complementarity': self.complementarity,
            'iterations': self.iterations,
            'solve_time': self.solve_time,
            'solver_status': self.solver_status,
        }
