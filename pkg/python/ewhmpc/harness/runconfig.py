import copy

from ..units import Physics, TankSpec, AmbientConditions, read_quantity
from ..util import get_arg, get_section, ConfigError
from ..tank import SimParams
from ..models import OneNodeParams, ThreeNodeParams
from ..control import MpcConfig, ThermostatState, Thermostat, OneNodeMpc, ThreeNodeMpc
from ..scenario import DrawProfile, PriceSchedule, ForecastSpec

class RunConfig():
    """
    Configuration of a closed-loop run. The frequently changed settings are
    attributes, everything else is read from the layered configuration
    sections when the components of the run are created.
    """

    CONTROLLERS = ['thermostat', 'one-node', 'three-node']
    ACTUATIONS = ['on-off', 'continuous']

    def __init__(self, config=None, orig=None):
        if not isinstance(orig, RunConfig):
            self.config = copy.deepcopy(config) if config is not None else {}

            run = get_section(self.config, 'run')
            scenario = get_section(self.config, 'scenario')

            self.controller = run.get('controller', 'three-node')
            self.days = int(run.get('days', 3))
            self.t_init = read_quantity(run, 't_init', 'temperature', Physics.f_to_k(120.0))
            self.log_interval = read_quantity(run, 'log_interval', 'time', 60.0)
            self.actuation = run.get('actuation', 'on-off')
            self.lower_element_scale = float(run.get('lower_element_scale', 1.0))
            self.daily_volume = read_quantity(scenario, 'daily_volume', 'volume')     # None for the base profile
            self.alpha = float(scenario.get('alpha', 1.0))
        else:
            self.config = copy.deepcopy(orig.config)

            self.controller = orig.controller
            self.days = orig.days
            self.t_init = orig.t_init
            self.log_interval = orig.log_interval
            self.actuation = orig.actuation
            self.lower_element_scale = orig.lower_element_scale
            self.daily_volume = orig.daily_volume
            self.alpha = orig.alpha

        self.validate()

    def validate(self):
        if self.controller not in RunConfig.CONTROLLERS:
            raise ConfigError(f'Unknown controller `{self.controller}`.')
        if self.actuation not in RunConfig.ACTUATIONS:
            raise ConfigError(f'Unknown actuation mode `{self.actuation}`.')
        if self.days < 1:
            raise ConfigError('A run lasts at least one day.')
        if not self.log_interval > 0:
            raise ConfigError('Log interval must be positive.')
        if not self.lower_element_scale > 0:
            raise ConfigError('Element power scale must be positive.')
        if not self.alpha > 0:
            raise ConfigError('Forecast scale factor must be positive.')

    def add_args(self, parser):
        parser.add_argument('--controller', type=str, choices=RunConfig.CONTROLLERS, help='Control strategy.\n')
        parser.add_argument('--days', type=int, help='Number of simulated days.\n')
        parser.add_argument('--daily-volume-gal', type=float, help='Daily draw volume in gal.\n')
        parser.add_argument('--alpha', type=float, help='Forecast scale factor.\n')
        parser.add_argument('--actuation', type=str, choices=RunConfig.ACTUATIONS, help='Element actuation mode.\n')
        parser.add_argument('--lower-element-scale', type=float, help='Scale of the lower element rating.\n')
        MpcConfig().add_args(parser)

    def init_from_args(self, args):
        self.controller = get_arg('controller', self.controller, args)
        self.days = get_arg('days', self.days, args)
        if get_arg('daily_volume_gal', None, args) is not None:
            self.daily_volume = Physics.gal_to_m3(args['daily_volume_gal'])
        self.alpha = get_arg('alpha', self.alpha, args)
        self.actuation = get_arg('actuation', self.actuation, args)
        self.lower_element_scale = get_arg('lower_element_scale', self.lower_element_scale, args)
        mpc = self.create_mpc_config()
        mpc.init_from_args(args)
        self.config['mpc'] = mpc.to_config()
        self.validate()

    def to_config(self):
        """Configuration sections with the attribute values written back."""
        c = copy.deepcopy(self.config)
        c['run'] = dict(get_section(c, 'run'))
        c['run'].update({
            'controller': self.controller,
            'days': self.days,
            't_init_k': self.t_init,
            'log_interval_s': self.log_interval,
            'actuation': self.actuation,
            'lower_element_scale': self.lower_element_scale,
        })
        for k in [k for k in c['run'] if k.startswith('t_init_') and k != 't_init_k'] + \
                 [k for k in c['run'] if k.startswith('log_interval_') and k != 'log_interval_s']:
            del c['run'][k]
        c['scenario'] = {k: v for k, v in get_section(c, 'scenario').items() if not k.startswith('daily_volume_')}
        if self.daily_volume is not None:
            c['scenario']['daily_volume_m3'] = self.daily_volume
        c['scenario']['alpha'] = self.alpha
        return c

    #region Factories

    def create_tank_spec(self):
        spec = TankSpec.from_config(get_section(self.config, 'tank'))
        if self.lower_element_scale != 1.0:
            spec = spec.scale_lower_power(self.lower_element_scale)
        return spec

    def create_ambient(self):
        return AmbientConditions.from_config(get_section(self.config, 'ambient'))

    def create_sim_params(self, spec):
        return SimParams.from_config(get_section(self.config, 'sim'), spec)

    def create_profile(self):
        profile = DrawProfile.from_config({k: v for k, v in get_section(self.config, 'scenario').items()
                                           if not k.startswith('daily_volume_')})
        if self.daily_volume is not None:
            profile = profile.synth_profile(self.daily_volume)
        return profile

    def create_prices(self):
        return PriceSchedule.from_config(get_section(self.config, 'scenario'))

    def create_forecast_spec(self):
        return ForecastSpec(alpha=self.alpha,
                            aggregation=get_section(self.config, 'scenario').get('aggregation', 'hourly'))

    def create_mpc_config(self):
        return MpcConfig.from_config(get_section(self.config, 'mpc'))

    def create_controller(self, spec, ambient):
        if self.controller == 'thermostat':
            return Thermostat(spec=spec, state=ThermostatState.from_config(get_section(self.config, 'thermostat')))
        elif self.controller == 'one-node':
            return OneNodeMpc(spec=spec, params=OneNodeParams.from_config(get_section(self.config, 'one_node')),
                              ambient=ambient, config=self.create_mpc_config())
        elif self.controller == 'three-node':
            section = dict(get_section(self.config, 'three_node'))
            if not any(k.startswith('V_total_') for k in section):
                section['V_total_m3'] = spec.total_volume
            return ThreeNodeMpc(spec=spec, params=ThreeNodeParams.from_config(section),
                                ambient=ambient, config=self.create_mpc_config())
        else:
            raise NotImplementedError()

    #endregion

    def get_daily_volume_gal(self):
        v = self.daily_volume if self.daily_volume is not None else self.create_profile().daily_volume
        return Physics.m3_to_gal(v)
