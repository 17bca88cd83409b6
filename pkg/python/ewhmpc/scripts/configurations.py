from .simulate import Simulate
from .identify import Identify
from .sweep import Sweep
from .calibratesim import CalibrateSim
from .dumpqp import DumpQp

COMMANDS = {
    'simulate': {
        'type': Simulate,
        'help': 'Run a closed-loop simulation.'
    },
    'identify': {
        'type': Identify,
        'help': 'Identify control model parameters.'
    },
    'sweep': {
        'type': Sweep,
        'help': 'Run a scenario sweep.'
    },
    'calibrate-sim': {
        'type': CalibrateSim,
        'help': 'Calibrate the tank simulator conductances.'
    },
    'dump-qp': {
        'type': DumpQp,
        'help': 'Write an MPC problem in the sparse text format.'
    },
}
