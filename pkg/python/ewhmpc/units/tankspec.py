from dataclasses import dataclass, field, replace
import numpy as np

from .physics import Physics
from .conversion import read_quantity

def _default_sensor_height_fracs():
    # Sensors 1-6 equally spaced on the side, 7 and 8 at the element heights
    return tuple([(i - 0.5) / 6 for i in range(1, 7)] + [0.2, 0.7])

@dataclass(frozen=True)
class TankSpec():
    """
    Geometry and ratings of a two-element resistive water heater. The default
    is a 50 gal tank with 1.13 kW elements. Element and sensor heights are
    given as fractions of the tank height, sensors are numbered 1-8 but
    stored with 0-based indices.
    """

    total_volume: float = Physics.gal_to_m3(50.0)   # m3
    height: float = 1.2                             # m
    lower_element_height_frac: float = 0.2
    upper_element_height_frac: float = 0.7
    p_bar_lower: float = 1130.0                     # W
    p_bar_upper: float = 1130.0                     # W
    sensor_height_fracs: tuple = field(default_factory=_default_sensor_height_fracs)

    SENSOR_COUNT = 8
    OUTLET_SENSOR = 6               # Sensor number used as outlet proxy
    LOWER_ELEMENT_SENSOR = 7
    UPPER_ELEMENT_SENSOR = 8

    def __post_init__(self):
        object.__setattr__(self, 'sensor_height_fracs', tuple(float(h) for h in self.sensor_height_fracs))

        if not self.total_volume > 0:
            raise ValueError('Tank volume must be positive.')
        if not self.height > 0:
            raise ValueError('Tank height must be positive.')
        for name in ['lower_element_height_frac', 'upper_element_height_frac']:
            h = getattr(self, name)
            if not 0 < h < 1:
                raise ValueError(f'Element height fraction `{name}` must be in (0, 1).')
        if not self.lower_element_height_frac < self.upper_element_height_frac:
            raise ValueError('Lower element must be below the upper element.')
        if not (self.p_bar_lower > 0 and self.p_bar_upper > 0):
            raise ValueError('Element powers must be positive.')
        if len(self.sensor_height_fracs) != TankSpec.SENSOR_COUNT:
            raise ValueError(f'Exactly {TankSpec.SENSOR_COUNT} sensor heights are required.')
        for h in self.sensor_height_fracs:
            if not 0 <= h <= 1:
                raise ValueError('Sensor height fractions must be in [0, 1].')

    @classmethod
    def default(cls):
        return cls()

    @classmethod
    def from_config(cls, section):
        """Create from a `tank` configuration section with unit-suffixed keys."""

        d = cls()
        if section is None:
            return d

        return cls(
            total_volume=read_quantity(section, 'total_volume', 'volume', d.total_volume),
            height=float(section.get('height_m', d.height)),
            lower_element_height_frac=float(section.get('lower_element_height_frac', d.lower_element_height_frac)),
            upper_element_height_frac=float(section.get('upper_element_height_frac', d.upper_element_height_frac)),
            p_bar_lower=read_quantity(section, 'p_bar_lower', 'power', d.p_bar_lower),
            p_bar_upper=read_quantity(section, 'p_bar_upper', 'power', d.p_bar_upper),
            sensor_height_fracs=section.get('sensor_height_fracs', d.sensor_height_fracs))

    def to_config(self):
        return {
            'total_volume_m3': self.total_volume,
            'height_m': self.height,
            'lower_element_height_frac': self.lower_element_height_frac,
            'upper_element_height_frac': self.upper_element_height_frac,
            'p_bar_lower_w': self.p_bar_lower,
            'p_bar_upper_w': self.p_bar_upper,
            'sensor_height_fracs': list(self.sensor_height_fracs),
        }

    def scale_lower_power(self, factor):
        return replace(self, p_bar_lower=self.p_bar_lower * factor)

    @staticmethod
    def node_index(height_frac, n_nodes):
        """Index of the node containing the given height, node 0 at the bottom."""
        return int(min(max(np.floor(height_frac * n_nodes + 1e-9), 0), n_nodes - 1))

    def get_sensor_nodes(self, n_nodes):
        return np.array([TankSpec.node_index(h, n_nodes) for h in self.sensor_height_fracs], dtype=int)

    def get_element_nodes(self, n_nodes):
        return (TankSpec.node_index(self.lower_element_height_frac, n_nodes),
                TankSpec.node_index(self.upper_element_height_frac, n_nodes))

    def element_volume_fractions(self):
        """Fraction of the volume below, between and above the elements."""
        lo, up = self.lower_element_height_frac, self.upper_element_height_frac
        return lo, up - lo, 1.0 - up
