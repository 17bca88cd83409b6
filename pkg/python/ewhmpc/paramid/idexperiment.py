import numpy as np

from ..units import Physics
from ..util import get_arg
from ..tank import TankSim
from .setup_logger import logger
from .iddataset import IdDataset

class IdExperiment():
    """
    Data collection protocol for identification on the tank simulator: a
    heating cycle followed by a period at rest, with no draws. Protocols:

    well-mixed
        Heating with the lower element from a uniform tank, then a separate
        rest segment started from a uniform hot tank.
    stratified
        Heating with the lower element from a tank with a hot upper half,
        then rest.
    three-node
        Heating with both elements on from a uniform cold tank, then rest.

    Gaussian noise can be added to the logged powers and temperatures.
    """

    PROTOCOLS = ['well-mixed', 'stratified', 'three-node']

    def __init__(self, sim=None, protocol='well-mixed', orig=None):
        if not isinstance(orig, IdExperiment):
            self.sim = sim if sim is not None else TankSim()
            self.protocol = protocol

            self.heat_duration = Physics.h_to_s(1.5)
            self.rest_duration = None                       # Protocol default when None
            self.t_start = Physics.f_to_k(110.0)            # Uniform heating start
            self.t_rest = Physics.f_to_k(130.0)             # Uniform rest start
            self.t_hot = Physics.f_to_k(140.0)              # Hot layer of the stratified start
            self.power_noise = 0.0                          # W
            self.temp_noise = 0.0                           # K
            self.seed = None
        else:
            self.sim = sim if sim is not None else orig.sim
            self.protocol = orig.protocol

            self.heat_duration = orig.heat_duration
            self.rest_duration = orig.rest_duration
            self.t_start = orig.t_start
            self.t_rest = orig.t_rest
            self.t_hot = orig.t_hot
            self.power_noise = orig.power_noise
            self.temp_noise = orig.temp_noise
            self.seed = orig.seed

        if self.protocol not in IdExperiment.PROTOCOLS:
            raise NotImplementedError(f'Identification protocol `{self.protocol}` is not supported.')

    def add_args(self, parser):
        parser.add_argument('--protocol', type=str, choices=IdExperiment.PROTOCOLS, help='Data collection protocol.\n')
        parser.add_argument('--heat-duration-h', type=float, help='Length of the heating cycle in h.\n')
        parser.add_argument('--rest-duration-h', type=float, help='Length of the rest period in h.\n')
        parser.add_argument('--power-noise', type=float, help='Std of the logged power noise in W.\n')
        parser.add_argument('--temp-noise', type=float, help='Std of the sensor noise in K.\n')
        parser.add_argument('--seed', type=int, help='Random seed of the noise.\n')

    def init_from_args(self, args):
        self.protocol = get_arg('protocol', self.protocol, args)
        if get_arg('heat_duration_h', None, args) is not None:
            self.heat_duration = Physics.h_to_s(args['heat_duration_h'])
        if get_arg('rest_duration_h', None, args) is not None:
            self.rest_duration = Physics.h_to_s(args['rest_duration_h'])
        self.power_noise = get_arg('power_noise', self.power_noise, args)
        self.temp_noise = get_arg('temp_noise', self.temp_noise, args)
        self.seed = get_arg('seed', self.seed, args)

    def get_rest_duration(self):
        if self.rest_duration is not None:
            return self.rest_duration
        elif self.protocol == 'stratified':
            return Physics.h_to_s(6)
        else:
            return Physics.h_to_s(12)

    def run_segment(self, state, p_lower, p_upper, duration, segment, rng):
        sim = self.sim
        n = int(round(duration / sim.params.sim_dt))

        time = np.empty(n + 1)
        sensors = np.empty((n + 1, 8))
        for k in range(n + 1):
            time[k] = state.time
            sensors[k] = sim.read_sensors(state)
            if k < n:
                state = sim.sim_step(state, p_lower, p_upper, 0.0)

        # The last sample closes the segment and carries no input
        pl = np.full(n + 1, float(p_lower))
        pu = np.full(n + 1, float(p_upper))
        pl[-1], pu[-1] = 0.0, 0.0

        if self.temp_noise > 0:
            sensors = sensors + rng.normal(0.0, self.temp_noise, size=sensors.shape)
        if self.power_noise > 0:
            pl[:-1] += np.where(pl[:-1] > 0, rng.normal(0.0, self.power_noise, size=n), 0.0)
            pu[:-1] += np.where(pu[:-1] > 0, rng.normal(0.0, self.power_noise, size=n), 0.0)

        dataset = IdDataset(time=time, sensors=sensors, p_lower=pl, p_upper=pu,
                            flow=np.zeros(n + 1), t_ambient=sim.ambient.t_ambient,
                            segment=np.full(n + 1, segment))
        return dataset, state

    def run(self):
        """Run the protocol and return the 1 s dataset with regime-tagged segments."""

        sim = self.sim
        spec = sim.spec
        rng = np.random.default_rng(self.seed)
        rest_duration = self.get_rest_duration()

        logger.info(f'Running the `{self.protocol}` identification protocol: '
                    f'{Physics.s_to_h(self.heat_duration):.2f} h heating, {Physics.s_to_h(rest_duration):.2f} h rest.')

        if self.protocol == 'well-mixed':
            s0 = sim.init_state_uniform(self.t_start)
            heat, _ = self.run_segment(s0, spec.p_bar_lower, 0.0, self.heat_duration, 0, rng)
            s1 = sim.init_state_uniform(self.t_rest, time=0.0)
            rest, _ = self.run_segment(s1, 0.0, 0.0, rest_duration, 1, rng)
        elif self.protocol == 'stratified':
            s0 = sim.init_state_two_layer(self.t_hot, sim.ambient.t_inlet, hot_frac=0.5)
            heat, s1 = self.run_segment(s0, spec.p_bar_lower, 0.0, self.heat_duration, 0, rng)
            rest, _ = self.run_segment(s1, 0.0, 0.0, rest_duration, 1, rng)
        elif self.protocol == 'three-node':
            s0 = sim.init_state_uniform(sim.ambient.t_inlet)
            heat, s1 = self.run_segment(s0, spec.p_bar_lower, spec.p_bar_upper, self.heat_duration, 0, rng)
            rest, _ = self.run_segment(s1, 0.0, 0.0, rest_duration, 1, rng)
        else:
            raise NotImplementedError()

        heat.regimes = {0: IdDataset.HEATING}
        rest.regimes = {1: IdDataset.AT_REST}
        return IdDataset.concatenate([heat, rest])
