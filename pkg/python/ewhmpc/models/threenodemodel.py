import numpy as np

from .controlmodel import ControlModel
from .threenodeparams import ThreeNodeParams

class ThreeNodeModel(ControlModel):
    """
    Three well-mixed regions: below the lower element, between the elements
    and above the upper element. The state is ordered (T_l, T_m, T_u), the
    controls are the lower (middle node) and upper element powers (p_m, p_u).
    Water drawn from the top is replaced from below, the lower node receives
    inlet water.
    """

    STATE_LABELS = ['T_l', 'T_m', 'T_u']
    CONTROL_LABELS = ['p_m', 'p_u']

    def __init__(self, params=None, ambient=None, dt_bar=300.0, orig=None):
        params = params if params is not None or orig is not None else ThreeNodeParams()
        super().__init__(params=params, ambient=ambient, dt_bar=dt_bar, orig=orig)

    def get_affine_step(self, flow, dt_bar=None):
        dt = dt_bar if dt_bar is not None else self.dt_bar
        p = self.params
        t_a, t_i = self.ambient.t_ambient, self.ambient.t_inlet
        C_l, C_m, C_u = p.C_l, p.C_m, p.C_u

        # Continuous-time generator dx/dt = F x + G u + h
        F = np.array([
            [-p.U_l / C_l - flow / p.V_l - p.K_ml / C_l, p.K_ml / C_l, 0.0],
            [flow / p.V_m + p.K_ml / C_m, -p.U_m / C_m - flow / p.V_m - p.K_ml / C_m - p.K_um / C_m, p.K_um / C_m],
            [0.0, flow / p.V_u + p.K_um / C_u, -p.U_u / C_u - flow / p.V_u - p.K_um / C_u],
        ])
        G = np.array([
            [0.0, 0.0],
            [1.0 / C_m, 0.0],
            [0.0, 1.0 / C_u],
        ])
        h = np.array([
            p.U_l / C_l * t_a + flow / p.V_l * t_i,
            p.U_m / C_m * t_a,
            p.U_u / C_u * t_a,
        ])

        return np.eye(3) + dt * F, dt * G, dt * h

    def three_node_step(self, state, p_m, p_u, flow, dt_bar=None):
        """Simultaneous forward Euler update of the three nodal balances."""

        dt = dt_bar if dt_bar is not None else self.dt_bar
        P = self.params
        t_a, t_i = self.ambient.t_ambient, self.ambient.t_inlet
        T_l, T_m, T_u = state

        dT_u = P.U_u / P.C_u * (t_a - T_u) - flow / P.V_u * (T_u - T_m) \
            + p_u / P.C_u + P.K_um / P.C_u * (T_m - T_u)
        dT_m = P.U_m / P.C_m * (t_a - T_m) - flow / P.V_m * (T_m - T_l) + p_m / P.C_m \
            + P.K_ml / P.C_m * (T_l - T_m) + P.K_um / P.C_m * (T_u - T_m)
        dT_l = P.U_l / P.C_l * (t_a - T_l) - flow / P.V_l * (T_l - t_i) \
            + P.K_ml / P.C_l * (T_m - T_l)

        return np.array([T_l + dt * dT_l, T_m + dt * dT_m, T_u + dt * dT_u])
