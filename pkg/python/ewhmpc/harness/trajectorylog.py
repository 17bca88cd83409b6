import numpy as np
import pandas as pd

from ..units import TankSpec
from .closedlooptrace import ClosedLoopTrace

class TrajectoryLog(ClosedLoopTrace):
    """
    Collects the trajectory of a closed-loop run at the log interval. Each
    row holds the state at its time and the power and flow averaged over
    the interval that follows. The CSV columns are compatible with
    `IdDataset.from_csv`.
    """

    def reset(self):
        super().reset()
        self.rows = []
        self.n_nodes = None
        self.t_ambient = None
        self.commands = []

    def on_run_start(self, config, sim, controller):
        self.n_nodes = sim.params.n_nodes
        self.t_ambient = sim.ambient.t_ambient

    def on_control(self, time, sensors, command):
        super().on_control(time, sensors, command)
        self.commands.append((time, command.p_lower, command.p_upper, command.fallback))

    def on_log(self, time, state, sensors, p_lower, p_upper, flow, volume, cost):
        self.rows.append(np.concatenate([
            [time], state.node_temps, sensors,
            [p_lower, p_upper, flow, self.t_ambient, volume, cost]]))

    def get_columns(self):
        return ['time_s'] \
            + [f'node_{i + 1}_k' for i in range(self.n_nodes)] \
            + [f'sensor_{i + 1}_k' for i in range(TankSpec.SENSOR_COUNT)] \
            + ['p_lower_w', 'p_upper_w', 'flow_m3s', 't_ambient_k', 'volume_m3', 'cost_usd']

    def to_dataframe(self):
        return pd.DataFrame(np.array(self.rows), columns=self.get_columns())

    def get_commands(self):
        return pd.DataFrame(self.commands, columns=['time_s', 'p_lower_w', 'p_upper_w', 'fallback'])

    def to_csv(self, filename):
        self.to_dataframe().to_csv(filename, index=False)
