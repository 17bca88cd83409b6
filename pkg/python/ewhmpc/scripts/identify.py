import os

from ..units import TankSpec, AmbientConditions
from ..util import get_arg, get_section
from ..tank import TankSim, SimParams
from ..paramid import IdDataset, IdExperiment, identify
from ..setup_logger import logger
from .script import Script

class Identify(Script):
    """
    Identify the parameters of a control model from a trajectory log or
    from a simulated identification protocol.
    """

    def __init__(self):
        super().__init__()
        self.log = None
        self.model = 'one-node'
        self.dt_bar = 300.0
        self.state = 'sensor7'
        self.experiment = None

    def add_args(self, parser):
        super().add_args(parser)
        parser.add_argument('--log', type=str, help='Trajectory CSV to identify from.\n')
        parser.add_argument('--model', type=str, choices=['one-node', 'three-node'], help='Control model.\n')
        parser.add_argument('--dt-bar', type=float, help='Resampling interval in s.\n')
        parser.add_argument('--state', type=str, choices=['sensor7', 'mean2to6'], help='One-node state sensor.\n')
        IdExperiment().add_args(parser)

    def init_from_args(self, args):
        super().init_from_args(args)
        section = get_section(self.config, 'identify')

        self.log = get_arg('log', section.get('log'), args)
        self.model = get_arg('model', section.get('model', self.model), args)
        self.dt_bar = get_arg('dt_bar', float(section.get('dt_bar_s', self.dt_bar)), args)
        self.state = get_arg('state', section.get('state', self.state), args)

        spec = TankSpec.from_config(get_section(self.config, 'tank'))
        ambient = AmbientConditions.from_config(get_section(self.config, 'ambient'))
        sim = TankSim(spec, SimParams.from_config(get_section(self.config, 'sim'), spec), ambient)
        default_protocol = 'three-node' if self.model == 'three-node' else 'well-mixed'
        self.experiment = IdExperiment(sim, protocol=section.get('protocol', default_protocol))
        self.experiment.init_from_args(args)
        self.spec = spec
        self.ambient = ambient

    def run(self):
        if self.log is not None:
            logger.info(f'Reading trajectory log `{self.log}`.')
            dataset = IdDataset.from_csv(self.log, t_ambient=self.ambient.t_ambient)
        else:
            dataset = self.experiment.run()
            dataset.to_csv(os.path.join(self.outdir, 'id_data.csv'))

        results = identify(dataset, model=self.model, dt_bar=self.dt_bar, state=self.state,
                           V_total=self.spec.total_volume)

        results.to_json(os.path.join(self.outdir, 'identify.json'))
        section = 'one_node' if self.model == 'one-node' else 'three_node'
        if results.is_plausible:
            self.save_config({section: results.to_config()})
        else:
            logger.warning('Estimates are not physically plausible, no parameter section is written.')
