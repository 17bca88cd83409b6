import numpy as np

from ..models import ThreeNodeModel, ThreeNodeParams
from ..util import pool_adjacent_violators
from .mpcconfig import MpcConfig
from .mpccontroller import MpcController
from .controlcommand import ControlCommand

class ThreeNodeMpc(MpcController):
    """
    MPC based on the three-node model. Both elements are commanded, the
    penalty applies to the upper node and the node temperatures are kept in
    non-decreasing order upwards. The state is read from sensors 1, 7 and 8.
    """

    NAME = 'three-node'
    SENSORS = [1, 7, 8]

    def __init__(self, spec=None, params=None, ambient=None, config=None, orig=None):
        if not isinstance(orig, ThreeNodeMpc):
            config = config if config is not None else MpcConfig()
            params = params if params is not None else ThreeNodeParams()
            model = ThreeNodeModel(params, ambient, dt_bar=config.dt_bar)
        else:
            model = None

        super().__init__(spec=spec, model=model, config=config, orig=orig)

    def get_p_bar(self):
        return [self.spec.p_bar_lower, self.spec.p_bar_upper]

    def get_penalty_state(self):
        return 2

    def is_ordered(self):
        return True

    def get_initial_state(self, sensors):
        sensors = np.asarray(sensors, dtype=float)
        return sensors[[s - 1 for s in ThreeNodeMpc.SENSORS]]

    def adjust_initial_state(self, x):
        # Equal-weight isotonic projection onto T_l <= T_m <= T_u
        return pool_adjacent_violators(x)

    def get_command(self, p):
        return ControlCommand(p_lower=float(p[0]), p_upper=float(p[1]))

def mpc_step_three_node(sensors, forecast, prices, config=None, params=None, spec=None, ambient=None):
    """
    Single stateless three-node MPC step from the sensor readings (T_l, T_m, T_u).
    """
    mpc = ThreeNodeMpc(spec=spec, params=params, ambient=ambient, config=config)
    s = np.zeros(8)
    s[[k - 1 for k in ThreeNodeMpc.SENSORS]] = sensors
    command = mpc.step(s, 0.0, forecast, prices)
    return command, mpc.diagnostics.records[-1]
