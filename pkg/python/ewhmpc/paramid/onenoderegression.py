import numpy as np

from ..units import Physics
from ..models import OneNodeParams
from .regressionsystem import RegressionSystem, UnderdeterminedError

class OneNodeRegression():
    """
    Energy balance of the well-mixed tank between consecutive samples with
    no flow:

        dt_bar p_j = rho cp V (T_j+1 - T_j) + dt_bar U (T_j - T_a)

    The state is sensor 7 or the mean of sensors 2-6.
    """

    STATES = ['sensor7', 'mean2to6']

    def __init__(self, state='sensor7'):
        if state not in OneNodeRegression.STATES:
            raise NotImplementedError(f'One-node state `{state}` is not supported.')
        self.state = state

    def get_temperature(self, dataset):
        if self.state == 'sensor7':
            return dataset.sensors[:, 6]
        else:
            return np.mean(dataset.sensors[:, 1:6], axis=1)

    def build(self, dataset, dt_bar):
        pairs = dataset.get_pairs(dt_bar)
        if pairs.size < 2:
            raise UnderdeterminedError(f'Only {pairs.size} usable sample pairs, at least 2 are required.')

        T = self.get_temperature(dataset)
        rc = Physics.RHO_WATER * Physics.CP_WATER
        W = np.stack([
            rc * (T[pairs + 1] - T[pairs]),
            dt_bar * (T[pairs] - dataset.t_ambient[pairs]),
        ], axis=1)
        z = dt_bar * dataset.power[pairs]

        return RegressionSystem(W, z, OneNodeParams.LABELS, ['energy'])

    def get_params(self, theta, V_total=None):
        return OneNodeParams.from_theta(theta)

def build_regression_one_node(dataset, dt_bar, state='sensor7'):
    return OneNodeRegression(state).build(dataset, dt_bar)
