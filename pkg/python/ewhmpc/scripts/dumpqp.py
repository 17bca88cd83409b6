import os

from ..units import Physics
from ..util import get_arg
from ..tank import TankSim
from ..control import MpcController
from ..scenario import Forecaster
from ..harness import RunConfig
from ..setup_logger import logger
from .script import Script

class DumpQp(Script):
    """
    Write the MPC problem of the closed-loop initial state at a given time
    of day to the sparse text format, and optionally solve it.
    """

    def __init__(self):
        super().__init__()
        self.run_config = None
        self.time = 0.0
        self.solve = False

    def add_args(self, parser):
        super().add_args(parser)
        RunConfig().add_args(parser)
        parser.add_argument('--time-h', type=float, default=0.0, help='Time of day of the problem in h.\n')
        parser.add_argument('--solve', action='store_true', help='Solve the problem and write the solution report.\n')

    def init_from_args(self, args):
        super().init_from_args(args)
        self.run_config = RunConfig(self.config)
        self.run_config.init_from_args(args)
        self.time = Physics.h_to_s(get_arg('time_h', 0.0, args))
        self.solve = get_arg('solve', False, args)

    def run(self):
        cfg = self.run_config
        spec = cfg.create_tank_spec()
        ambient = cfg.create_ambient()
        controller = cfg.create_controller(spec, ambient)
        if not isinstance(controller, MpcController):
            raise ValueError(f'Controller `{cfg.controller}` does not solve a QP.')

        sim = TankSim(spec, cfg.create_sim_params(spec), ambient)
        sensors = sim.read_sensors(sim.init_state_closed_loop(cfg.t_init))
        forecast = Forecaster(cfg.create_profile(), cfg.create_forecast_spec()) \
            .make_forecast(self.time, controller.horizon_steps, controller.period)
        prices = cfg.create_prices().price_vector(self.time, controller.horizon_steps, controller.period)

        problem = controller.get_problem(sensors, forecast, prices)
        filename = os.path.join(self.outdir, 'qp.txt')
        problem.dump(filename)
        logger.info(f'QP with {problem.size} variables written to `{filename}`.')

        if self.solve:
            solution = controller.solver.solve(problem)
            self.save_json(solution.to_dict(), 'qp_solution.json')
