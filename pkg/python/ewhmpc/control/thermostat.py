from dataclasses import dataclass, replace

from ..units import Physics, TankSpec, read_quantity
from .controller import Controller
from .controlcommand import ControlCommand

@dataclass(frozen=True)
class ThermostatState():
    """Hysteresis latches of the two elements and the deadband in K."""

    lower_heating: bool = False
    upper_heating: bool = False
    T_low: float = Physics.f_to_k(115.0)
    T_high: float = Physics.f_to_k(125.0)
    period: float = 30.0                    # s

    def __post_init__(self):
        if not self.T_low < self.T_high:
            raise ValueError('Lower deadband temperature must be below the upper one.')
        if not self.period > 0:
            raise ValueError('Thermostat period must be positive.')

    @classmethod
    def from_config(cls, section):
        d = cls()
        section = section or {}
        return cls(T_low=read_quantity(section, 'T_low', 'temperature', d.T_low),
                   T_high=read_quantity(section, 'T_high', 'temperature', d.T_high),
                   period=read_quantity(section, 'period', 'time', d.period))

    def to_config(self):
        return {
            'T_low_k': self.T_low,
            'T_high_k': self.T_high,
            'period_s': self.period,
        }

def update_latch(heating, sensor, T_low, T_high):
    if sensor < T_low:
        return True
    elif sensor > T_high:
        return False
    else:
        return heating

def thermostat_step(state, sensor_upper, sensor_lower, p_bar_lower=1130.0, p_bar_upper=1130.0):
    """
    Update the element latches and return the command. The upper element has
    priority, the lower one runs only while the upper one is idle.
    """

    upper = update_latch(state.upper_heating, sensor_upper, state.T_low, state.T_high)
    lower = update_latch(state.lower_heating, sensor_lower, state.T_low, state.T_high)

    command = ControlCommand(
        p_lower=p_bar_lower if lower and not upper else 0.0,
        p_upper=p_bar_upper if upper else 0.0,
        mode='on-off')

    return command, replace(state, lower_heating=lower, upper_heating=upper)

class Thermostat(Controller):
    """
    Conventional two-element thermostat. Reads sensor 8 for the upper and
    sensor 7 for the lower element.
    """

    NAME = 'thermostat'

    def __init__(self, spec=None, state=None, orig=None):
        super().__init__(spec=spec, orig=orig)

        if not isinstance(orig, Thermostat):
            self.initial_state = state if state is not None else ThermostatState()
        else:
            self.initial_state = state if state is not None else orig.initial_state

        self.state = self.initial_state

    @property
    def period(self):
        return self.state.period

    def reset(self):
        self.state = self.initial_state

    def step(self, sensors, time, forecast=None, prices=None):
        command, self.state = thermostat_step(
            self.state,
            sensors[TankSpec.UPPER_ELEMENT_SENSOR - 1],
            sensors[TankSpec.LOWER_ELEMENT_SENSOR - 1],
            self.spec.p_bar_lower, self.spec.p_bar_upper)
        return command
