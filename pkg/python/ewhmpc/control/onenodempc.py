import numpy as np

from ..models import OneNodeModel, OneNodeParams
from .mpcconfig import MpcConfig
from .mpccontroller import MpcController
from .controlcommand import ControlCommand

class OneNodeMpc(MpcController):
    """
    MPC based on the well-mixed tank model. Only the lower element is
    commanded. The state is sensor 7 or the average of sensors 2-6.
    """

    NAME = 'one-node'

    def __init__(self, spec=None, params=None, ambient=None, config=None, orig=None):
        if not isinstance(orig, OneNodeMpc):
            config = config if config is not None else MpcConfig()
            params = params if params is not None else OneNodeParams()
            model = OneNodeModel(params, ambient, dt_bar=config.dt_bar)
        else:
            model = None

        super().__init__(spec=spec, model=model, config=config, orig=orig)

    def get_p_bar(self):
        return [self.spec.p_bar_lower]

    def get_initial_state(self, sensors):
        sensors = np.asarray(sensors, dtype=float)
        if self.config.one_node_state == 'sensor7':
            return np.array([sensors[6]])
        elif self.config.one_node_state == 'mean2to6':
            return np.array([np.mean(sensors[1:6])])
        else:
            raise NotImplementedError()

    def get_command(self, p):
        return ControlCommand(p_lower=float(p[0]), p_upper=0.0)

def mpc_step_one_node(sensor, forecast, prices, config=None, params=None, spec=None, ambient=None):
    """Single stateless one-node MPC step from the lower-element sensor reading."""
    mpc = OneNodeMpc(spec=spec, params=params, ambient=ambient, config=config)
    sensors = np.full(8, sensor)
    command = mpc.step(sensors, 0.0, forecast, prices)
    return command, mpc.diagnostics.records[-1]
