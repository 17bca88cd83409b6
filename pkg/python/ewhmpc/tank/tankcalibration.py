import numpy as np
from scipy.optimize import brentq

from ..units import Physics, TankSpec, AmbientConditions, read_quantity
from ..util import get_arg
from .simparams import SimParams
from .tanksim import TankSim
from .setup_logger import logger

class TankCalibration():
    """
    Tunes the default simulator conductances. The ambient loss is split evenly
    between the nodes to match the whole-tank conductance, then the axial
    conductance is found by bisection so that a half-hot, half-cold tank at
    rest loses half of its top-bottom temperature difference after the
    target time.
    """

    def __init__(self, spec=None, ambient=None, orig=None):
        if not isinstance(orig, TankCalibration):
            self.spec = spec if spec is not None else TankSpec.default()
            self.ambient = ambient if ambient is not None else AmbientConditions()

            self.n_nodes = 20
            self.sim_dt = 60.0                              # Coarse step for the search
            self.ua_total = 1.27                            # W/K
            self.target_half_life = Physics.h_to_s(48)      # s
            self.t_hot = Physics.f_to_k(140.0)
            self.t_cold = self.ambient.t_inlet
            self.k_min = 0.05                               # W/K
            self.k_max = 200.0                              # W/K
            self.rtol = 1e-3
            self.max_iter = 60
        else:
            self.spec = spec if spec is not None else orig.spec
            self.ambient = ambient if ambient is not None else orig.ambient

            self.n_nodes = orig.n_nodes
            self.sim_dt = orig.sim_dt
            self.ua_total = orig.ua_total
            self.target_half_life = orig.target_half_life
            self.t_hot = orig.t_hot
            self.t_cold = orig.t_cold
            self.k_min = orig.k_min
            self.k_max = orig.k_max
            self.rtol = orig.rtol
            self.max_iter = orig.max_iter

    def add_args(self, parser):
        parser.add_argument('--target-half-life-h', type=float, help='Destratification half-life in h.\n')
        parser.add_argument('--ua-total', type=float, help='Whole-tank ambient conductance in W/K.\n')

    def init_from_config(self, section):
        section = section or {}
        self.n_nodes = int(section.get('n_nodes', self.n_nodes))
        self.sim_dt = read_quantity(section, 'sim_dt', 'time', self.sim_dt)
        self.ua_total = float(section.get('ua_total_w_per_k', self.ua_total))
        self.target_half_life = read_quantity(section, 'target_half_life', 'time', self.target_half_life)
        self.t_hot = read_quantity(section, 't_hot', 'temperature', self.t_hot)
        self.t_cold = read_quantity(section, 't_cold', 'temperature', self.t_cold)

    def init_from_args(self, args):
        h = get_arg('target_half_life_h', None, args)
        if h is not None:
            self.target_half_life = Physics.h_to_s(h)
        self.ua_total = get_arg('ua_total', self.ua_total, args)

    def create_params(self, k_axial, sim_dt=None):
        return SimParams.from_tank_spec(self.spec, n_nodes=self.n_nodes,
                                        sim_dt=sim_dt if sim_dt is not None else self.sim_dt,
                                        ua_total=self.ua_total, k_axial=k_axial)

    def half_life(self, k_axial, max_time=None):
        """
        Time in s until the top-bottom temperature difference of the two-layer
        tank halves, with no flow and no power. Returns `inf` if it does not
        happen within `max_time`.
        """

        max_time = max_time if max_time is not None else 20 * self.target_half_life
        sim = TankSim(self.spec, self.create_params(k_axial), self.ambient)
        state = sim.init_state_two_layer(self.t_hot, self.t_cold, hot_frac=0.5)
        d0 = np.ptp(state.node_temps)

        t = 0.0
        while t < max_time:
            state = sim.sim_step(state, 0.0, 0.0, 0.0)
            t += sim.params.sim_dt
            if np.ptp(state.node_temps) <= 0.5 * d0:
                return t

        return np.inf

    def calibrate(self):
        """
        Find the axial conductance, return the simulator parameters with the
        production time step and a report dictionary.
        """

        lo, hi = np.log(self.k_min), np.log(self.k_max)
        t_lo = self.half_life(self.k_min)
        t_hi = self.half_life(self.k_max)
        if not t_hi <= self.target_half_life <= t_lo:
            raise ValueError(f'Target half-life of {Physics.s_to_h(self.target_half_life):.1f} h cannot be reached '
                             f'with k_axial in [{self.k_min}, {self.k_max}] W/K.')

        def objective(log_k):
            t = self.half_life(np.exp(log_k))
            logger.debug(f'Calibration at k_axial = {np.exp(log_k):.4f} W/K, half-life = {Physics.s_to_h(t):.2f} h.')
            return min(t, 20 * self.target_half_life) - self.target_half_life

        log_k, r = brentq(objective, lo, hi, xtol=self.rtol, maxiter=self.max_iter, full_output=True, disp=False)
        it = r.iterations

        k = float(np.exp(log_k))
        t = self.half_life(k)
        logger.info(f'Calibrated k_axial = {k:.4f} W/K with destratification half-life of {Physics.s_to_h(t):.2f} h.')

        params = self.create_params(k, sim_dt=1.0)
        report = {
            'k_axial_w_per_k': k,
            'ua_total_w_per_k': self.ua_total,
            'half_life_h': Physics.s_to_h(t),
            'target_half_life_h': Physics.s_to_h(self.target_half_life),
            'iterations': it,
        }
        return params, report
