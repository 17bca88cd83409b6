from dataclasses import dataclass

from .physics import Physics
from .conversion import read_quantity

@dataclass(frozen=True)
class AmbientConditions():
    """
    Ambient air and inlet water temperatures in K, held constant over a run.
    """

    t_ambient: float = Physics.f_to_k(70.0)
    t_inlet: float = Physics.f_to_k(68.0)

    T_MIN = 273.15
    T_MAX = 373.15

    def __post_init__(self):
        for name in ['t_ambient', 't_inlet']:
            t = getattr(self, name)
            if not AmbientConditions.T_MIN <= t < AmbientConditions.T_MAX:
                raise ValueError(f'Temperature `{name}` = {t} K is outside of [273.15, 373.15).')
        if self.t_inlet > self.t_ambient + 50:
            raise ValueError('Inlet temperature is implausibly high relative to ambient.')

    @classmethod
    def from_f(cls, t_ambient, t_inlet):
        return cls(Physics.f_to_k(t_ambient), Physics.f_to_k(t_inlet))

    @classmethod
    def from_config(cls, section):
        d = cls()
        return cls(
            t_ambient=read_quantity(section, 't_ambient', 'temperature', d.t_ambient),
            t_inlet=read_quantity(section, 't_inlet', 'temperature', d.t_inlet))

    def to_config(self):
        return {
            't_ambient_k': self.t_ambient,
            't_inlet_k': self.t_inlet,
        }
