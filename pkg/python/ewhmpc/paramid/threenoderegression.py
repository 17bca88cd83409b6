import numpy as np

from ..units import Physics
from ..models import ThreeNodeParams
from .regressionsystem import RegressionSystem, UnderdeterminedError

class ThreeNodeRegression():
    """
    Nodal energy balances of the three-node model between consecutive
    samples with no flow. Each pair yields the upper, the middle and the
    lower balance, in this order. The lower volume is eliminated through
    V_l = V_total - V_m - V_u, which puts the total volume term on the
    left-hand side of the lower balance.
    """

    EQUATIONS = ['upper', 'middle', 'lower']
    SENSORS = [1, 7, 8]

    def __init__(self, V_total=Physics.gal_to_m3(50.0)):
        self.V_total = V_total

    def build(self, dataset, dt_bar):
        pairs = dataset.get_pairs(dt_bar)
        if pairs.size < 2:
            raise UnderdeterminedError(f'Only {pairs.size} usable sample pairs, at least 2 are required.')

        s = [k - 1 for k in ThreeNodeRegression.SENSORS]
        T_l, T_m, T_u = dataset.sensors[:, s[0]], dataset.sensors[:, s[1]], dataset.sensors[:, s[2]]
        T_a = dataset.t_ambient
        rc = Physics.RHO_WATER * Physics.CP_WATER
        j, k = pairs, pairs + 1

        # Columns: U_l, U_m, U_u, K_ml, K_um, V_m, V_u
        n = pairs.size
        W = np.zeros((3 * n, 7))
        z = np.zeros(3 * n)

        # Upper node
        W[0::3, 2] = dt_bar * (T_u[j] - T_a[j])
        W[0::3, 4] = dt_bar * (T_u[j] - T_m[j])
        W[0::3, 6] = rc * (T_u[k] - T_u[j])
        z[0::3] = dt_bar * dataset.p_upper[j]

        # Middle node, heated by the lower element
        W[1::3, 1] = dt_bar * (T_m[j] - T_a[j])
        W[1::3, 3] = dt_bar * (T_m[j] - T_l[j])
        W[1::3, 4] = dt_bar * (T_m[j] - T_u[j])
        W[1::3, 5] = rc * (T_m[k] - T_m[j])
        z[1::3] = dt_bar * dataset.p_lower[j]

        # Lower node
        W[2::3, 0] = dt_bar * (T_l[j] - T_a[j])
        W[2::3, 3] = dt_bar * (T_l[j] - T_m[j])
        W[2::3, 5] = rc * (T_l[j] - T_l[k])
        W[2::3, 6] = rc * (T_l[j] - T_l[k])
        z[2::3] = self.V_total * rc * (T_l[j] - T_l[k])

        return RegressionSystem(W, z, ThreeNodeParams.LABELS, ThreeNodeRegression.EQUATIONS)

    def get_params(self, theta, V_total=None):
        return ThreeNodeParams.from_theta(theta, V_total if V_total is not None else self.V_total)

def build_regression_three_node(dataset, dt_bar, V_total=Physics.gal_to_m3(50.0)):
    return ThreeNodeRegression(V_total).build(dataset, dt_bar)
