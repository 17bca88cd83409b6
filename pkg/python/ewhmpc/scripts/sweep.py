import os
import numpy as np

from ..util import get_section
from ..harness import RunConfig, Sweep as SweepRunner, AcceptanceCheck
from .script import Script, CheckFailedError

class Sweep(Script):
    """Closed-loop runs over a volume, alpha or actuation axis."""

    def __init__(self):
        super().__init__()
        self.sweep = None
        self.check = False

    def add_args(self, parser):
        super().add_args(parser)
        RunConfig().add_args(parser)
        SweepRunner().add_args(parser)
        parser.add_argument('--check', action='store_true', help='Evaluate the acceptance criteria.\n')

    def init_from_args(self, args):
        super().init_from_args(args)
        run_config = RunConfig(self.config)
        run_config.init_from_args(args)
        self.sweep = SweepRunner(run_config)
        self.sweep.init_from_config(get_section(self.config, 'sweep'))
        self.sweep.init_from_args(args)
        self.check = args.get('check', False)

    def run(self):
        self.save_config(self.sweep.config.to_config())

        table = self.sweep.run(progress=self.progress)
        table.to_csv(os.path.join(self.outdir, 'sweep.csv'), index=False)

        if self.check:
            mpc = self.sweep.config.create_mpc_config()
            check = AcceptanceCheck(T_low=mpc.T_low, T_high=mpc.T_high,
                                    offpeak_price=float(np.min(self.sweep.config.create_prices().prices)))
            passed = check.check_sweep(table, axis=self.sweep.axis)
            self.save_json(check.results, 'check.json')
            if not passed:
                raise CheckFailedError('Acceptance check failed.')
