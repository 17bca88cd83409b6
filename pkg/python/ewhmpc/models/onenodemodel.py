import numpy as np

from .controlmodel import ControlModel
from .onenodeparams import OneNodeParams

class OneNodeModel(ControlModel):
    """
    Well-mixed tank: C dT/dt = p + U (T_a - T) - rho cp v (T - T_i), with a
    single element power as control.
    """

    STATE_LABELS = ['T']
    CONTROL_LABELS = ['p']

    def __init__(self, params=None, ambient=None, dt_bar=300.0, orig=None):
        params = params if params is not None or orig is not None else OneNodeParams()
        super().__init__(params=params, ambient=ambient, dt_bar=dt_bar, orig=orig)

    def get_affine_step(self, flow, dt_bar=None):
        dt = dt_bar if dt_bar is not None else self.dt_bar
        p = self.params
        C = p.C
        t_a, t_i = self.ambient.t_ambient, self.ambient.t_inlet

        A = np.array([[1.0 - dt * (p.U / C + flow / p.V)]])
        B = np.array([[dt / C]])
        c = np.array([dt * (p.U / C * t_a + flow / p.V * t_i)])
        return A, B, c

    def one_node_step(self, T, p, flow, dt_bar=None):
        """Scalar forward Euler step of the well-mixed tank."""
        dt = dt_bar if dt_bar is not None else self.dt_bar
        P = self.params
        t_a, t_i = self.ambient.t_ambient, self.ambient.t_inlet
        return T + dt * (p / P.C + P.U / P.C * (t_a - T) - flow / P.V * (T - t_i))
