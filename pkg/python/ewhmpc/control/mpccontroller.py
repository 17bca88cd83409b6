import numpy as np

from .setup_logger import logger
from ..qp import QpSolver
from .controller import Controller
from .controlcommand import ControlCommand
from .mpcconfig import MpcConfig
from .mpcdiagnostics import MpcDiagnostics
from .mpcproblembuilder import MpcProblemBuilder
from .thermostat import Thermostat, ThermostatState

class MpcController(Controller):
    """
    Receding-horizon controller. Every control interval the QP of the
    horizon is built from the current sensor readings, solved and its first
    action applied. When the solver does not return an optimal solution the
    thermostat logic decides the interval instead.
    """

    def __init__(self, spec=None, model=None, config=None, orig=None):
        super().__init__(spec=spec, orig=orig)

        if not isinstance(orig, MpcController):
            self.model = model
            self.config = config if config is not None else MpcConfig()
        else:
            self.model = model if model is not None else orig.model
            self.config = config if config is not None else MpcConfig(orig=orig.config)

        self.solver = QpSolver(tol=self.config.tol, max_iter=self.config.max_iter)
        self.builder = MpcProblemBuilder(self.model, self.config, self.get_p_bar(),
                                         penalty_state=self.get_penalty_state(),
                                         ordered=self.is_ordered())
        self.fallback = Thermostat(spec=self.spec,
                                   state=ThermostatState(T_low=self.config.T_low, T_high=self.config.T_high))
        self.diagnostics = MpcDiagnostics(self.model.STATE_LABELS)
        self.last_solution = None

    @property
    def period(self):
        return self.config.dt

    @property
    def horizon_steps(self):
        return self.config.N

    def reset(self):
        self.fallback.reset()
        self.diagnostics.reset()
        self.last_solution = None

    def get_p_bar(self):
        raise NotImplementedError()

    def get_penalty_state(self):
        return 0

    def is_ordered(self):
        return False

    def get_initial_state(self, sensors):
        raise NotImplementedError()

    def adjust_initial_state(self, x):
        return x

    def get_command(self, p):
        raise NotImplementedError()

    def get_problem(self, sensors, forecast, prices):
        x = self.adjust_initial_state(self.get_initial_state(sensors))
        return self.builder.build(x, forecast, prices)

    def step(self, sensors, time, forecast=None, prices=None):
        x_raw = self.get_initial_state(sensors)
        x0 = self.adjust_initial_state(x_raw)
        adjustment = float(np.max(np.abs(x0 - x_raw)))
        if adjustment > 0:
            logger.debug(f'Initial state adjusted by {adjustment:.3f} K at t={time:.0f} s.')

        self.diagnostics.set_realized(x_raw)

        problem = self.builder.build(x0, forecast, prices)
        x_ws = None
        if self.config.warm_start and self.last_solution is not None:
            x_ws = self.builder.shift_solution(self.last_solution)

        solution = self.solver.solve(problem, x0=x_ws)

        if solution.is_optimal:
            p = self.builder.get_first_action(solution.x)
            command = self.get_command(p)
            predicted = self.builder.get_states(solution.x)[1]
            self.last_solution = solution.x
            fallback = False
        else:
            logger.warning(f'MPC solve at t={time:.0f} s returned `{solution.status}` '
                           f'(solver status `{solution.solver_status}`), falling back to thermostat logic.')
            c = self.fallback.step(sensors, time)
            command = ControlCommand(p_lower=c.p_lower, p_upper=c.p_upper, mode='on-off', fallback=True)
            predicted = None
            self.last_solution = None
            fallback = True

        self.diagnostics.record(time, solution, predicted, fallback, adjustment)
        return command
