from .physics import Physics
from .conversion import UnitError, convert_units, read_quantity, quantity_keys
from .quantity import Temperature, Volume, Power, Energy, Duration
from .tankspec import TankSpec
from .ambientconditions import AmbientConditions
