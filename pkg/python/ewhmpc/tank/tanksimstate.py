import numpy as np

class TankSimState():
    """
    Node temperatures of the simulated tank in K, index 0 at the bottom, and
    the simulation time in s.
    """

    T_MIN = 273.15
    T_MAX = 373.15

    def __init__(self, node_temps=None, time=0.0, validate=True, orig=None):
        if not isinstance(orig, TankSimState):
            self.node_temps = np.array(node_temps, dtype=float)
            self.time = float(time)
        else:
            self.node_temps = np.array(node_temps if node_temps is not None else orig.node_temps, dtype=float)
            self.time = float(time if time is not None else orig.time)

        if validate:
            self.validate()

    def validate(self):
        t = self.node_temps
        if t.ndim != 1 or t.size == 0:
            raise ValueError('Node temperatures must be a non-empty vector.')
        if not (np.all(np.isfinite(t)) and np.all(t >= TankSimState.T_MIN) and np.all(t < TankSimState.T_MAX)):
            raise ValueError(f'Node temperatures out of range at t = {self.time} s.')

    @property
    def n_nodes(self):
        return self.node_temps.size

    def mean_temp(self):
        return float(np.mean(self.node_temps))
