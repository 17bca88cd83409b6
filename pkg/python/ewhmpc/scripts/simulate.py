import os
import numpy as np

from ..control import MpcController
from ..harness import RunConfig, ClosedLoop, TrajectoryLog, AcceptanceCheck
from .script import Script, CheckFailedError

class Simulate(Script):
    """Run one closed-loop simulation and write the trajectory and metrics."""

    def __init__(self):
        super().__init__()
        self.run_config = None
        self.check = False

    def add_args(self, parser):
        super().add_args(parser)
        RunConfig().add_args(parser)
        parser.add_argument('--check', action='store_true', help='Evaluate the acceptance criteria.\n')

    def init_from_args(self, args):
        super().init_from_args(args)
        self.run_config = RunConfig(self.config)
        self.run_config.init_from_args(args)
        self.check = args.get('check', False)

    def run(self):
        self.save_config(self.run_config.to_config())

        trace = TrajectoryLog(outdir=self.outdir)
        loop = ClosedLoop(self.run_config, trace=trace, progress=self.progress)
        metrics = loop.run()

        trace.to_csv(os.path.join(self.outdir, 'trajectory.csv'))
        metrics.to_csv(os.path.join(self.outdir, 'metrics.csv'))

        diagnostics = {'metrics': metrics.to_dict()}
        if isinstance(loop.controller, MpcController):
            d = loop.controller.diagnostics
            diagnostics['mpc'] = d.get_summary()
            diagnostics['mpc_calls'] = d.to_dataframe().replace({np.nan: None}).to_dict('records')
        self.save_json(diagnostics, 'diagnostics.json')

        if self.check:
            mpc = self.run_config.create_mpc_config()
            check = AcceptanceCheck(T_low=mpc.T_low, T_high=mpc.T_high,
                                    offpeak_price=float(np.min(self.run_config.create_prices().prices)))
            if not check.check_run(metrics):
                self.save_json(check.results, 'check.json')
                raise CheckFailedError('Acceptance check failed.')
            self.save_json(check.results, 'check.json')
