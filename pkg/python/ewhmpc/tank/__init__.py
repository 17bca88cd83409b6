from .simparams import SimParams
from .tanksimstate import TankSimState
from .energybalance import EnergyBalance
from .tanksim import TankSim, CflError
from .tankcalibration import TankCalibration
