from ..units import Physics, read_quantity
from ..util import get_arg

class MpcConfig():
    """
    Hyperparameters shared by the one-node and three-node MPC controllers.
    Temperatures are in K, durations in s.

    Variables
    ---------
    dt : float
        Control interval, the horizon is discretized into N = horizon / dt steps
    m : int
        Number of Euler sub-steps per control interval, dt_bar = dt / m
    T_low, T_high : float
        Comfort deadband
    lam : float
        Penalty weight on deadband violations in $/K^2
    beta : float
        Relative weight of overshoot above T_high
    """

    ONE_NODE_STATES = ['sensor7', 'mean2to6']

    def __init__(self, dt=600.0, m=2, horizon=18 * 3600.0,
                 T_low=Physics.f_to_k(115.0), T_high=Physics.f_to_k(125.0),
                 lam=0.05, beta=4.0, tol=1e-6, max_iter=20000, warm_start=True,
                 temp_scale=10.0, one_node_state='sensor7', penalize_initial=True,
                 orig=None):

        if not isinstance(orig, MpcConfig):
            self.dt = dt
            self.m = m
            self.horizon = horizon
            self.T_low = T_low
            self.T_high = T_high
            self.lam = lam
            self.beta = beta
            self.tol = tol
            self.max_iter = max_iter
            self.warm_start = warm_start
            self.temp_scale = temp_scale
            self.one_node_state = one_node_state
            self.penalize_initial = penalize_initial
        else:
            self.dt = orig.dt
            self.m = orig.m
            self.horizon = orig.horizon
            self.T_low = orig.T_low
            self.T_high = orig.T_high
            self.lam = orig.lam
            self.beta = orig.beta
            self.tol = orig.tol
            self.max_iter = orig.max_iter
            self.warm_start = orig.warm_start
            self.temp_scale = orig.temp_scale
            self.one_node_state = orig.one_node_state
            self.penalize_initial = orig.penalize_initial

        self.validate()

    @property
    def N(self):
        return int(round(self.horizon / self.dt))

    @property
    def dt_bar(self):
        return self.dt / self.m

    def validate(self):
        if not self.dt > 0 or not self.horizon > 0:
            raise ValueError('Control interval and horizon must be positive.')
        if int(self.m) != self.m or self.m < 1:
            raise ValueError('Number of Euler sub-steps must be a positive integer.')
        if abs(self.N * self.dt - self.horizon) > 1e-6 * self.horizon or self.N < 1:
            raise ValueError(f'Horizon {self.horizon} s is not a multiple of the control interval {self.dt} s.')
        if not self.T_low < self.T_high:
            raise ValueError('Lower deadband temperature must be below the upper one.')
        if not self.lam > 0 or not self.beta > 0:
            raise ValueError('Penalty weights must be positive.')
        if not self.tol > 0 or not self.max_iter > 0:
            raise ValueError('Solver tolerance and iteration limit must be positive.')
        if not self.temp_scale > 0:
            raise ValueError('Temperature scale must be positive.')
        if self.one_node_state not in MpcConfig.ONE_NODE_STATES:
            raise NotImplementedError(f'One-node state `{self.one_node_state}` is not supported.')

    def add_args(self, parser):
        parser.add_argument('--mpc-dt', type=float, help='Control interval in s.\n')
        parser.add_argument('--mpc-m', type=int, help='Euler sub-steps per control interval.\n')
        parser.add_argument('--mpc-horizon-h', type=float, help='Prediction horizon in h.\n')
        parser.add_argument('--mpc-lambda', type=float, help='Deadband penalty weight in $/K^2.\n')
        parser.add_argument('--mpc-beta', type=float, help='Relative overshoot weight.\n')
        parser.add_argument('--one-node-state', type=str, choices=MpcConfig.ONE_NODE_STATES,
                            help='Sensor mapping of the one-node state.\n')
        parser.add_argument('--no-warm-start', action='store_true', help='Solve every QP cold.\n')

    def init_from_args(self, args):
        self.dt = get_arg('mpc_dt', self.dt, args)
        self.m = get_arg('mpc_m', self.m, args)
        if get_arg('mpc_horizon_h', None, args) is not None:
            self.horizon = Physics.h_to_s(args['mpc_horizon_h'])
        self.lam = get_arg('mpc_lambda', self.lam, args)
        self.beta = get_arg('mpc_beta', self.beta, args)
        self.one_node_state = get_arg('one_node_state', self.one_node_state, args)
        if get_arg('no_warm_start', False, args):
            self.warm_start = False
        self.validate()

    @classmethod
    def from_config(cls, section):
        d = cls()
        section = section or {}
        return cls(
            dt=read_quantity(section, 'dt', 'time', d.dt),
            m=int(section.get('m', d.m)),
            horizon=read_quantity(section, 'horizon', 'time', d.horizon),
            T_low=read_quantity(section, 'T_low', 'temperature', d.T_low),
            T_high=read_quantity(section, 'T_high', 'temperature', d.T_high),
            lam=float(section.get('lambda', d.lam)),
            beta=float(section.get('beta', d.beta)),
            tol=float(section.get('tol', d.tol)),
            max_iter=int(section.get('max_iter', d.max_iter)),
            warm_start=bool(section.get('warm_start', d.warm_start)),
            temp_scale=float(section.get('temp_scale_k', d.temp_scale)),
            one_node_state=section.get('one_node_state', d.one_node_state),
            penalize_initial=bool(section.get('penalize_initial', d.penalize_initial)))

    def to_config(self):
        return {
            'dt_s': self.dt,
            'm': self.m,
            'horizon_s': self.horizon,
            'T_low_k': self.T_low,
            'T_high_k': self.T_high,
            'lambda': self.lam,
            'beta': self.beta,
            'tol': self.tol,
            'max_iter': self.max_iter,
            'warm_start': self.warm_start,
            'temp_scale_k': self.temp_scale,
            'one_node_state': self.one_node_state,
            'penalize_initial': self.penalize_initial,
        }
