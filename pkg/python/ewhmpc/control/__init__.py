from .mpcconfig import MpcConfig
from .controlcommand import ControlCommand
from .onoffconverter import OnOffConverter, to_on_off
from .controller import Controller
from .thermostat import ThermostatState, Thermostat, thermostat_step
from .mpcdiagnostics import MpcDiagnostics
from .mpcproblembuilder import MpcProblemBuilder
from .mpccontroller import MpcController
from .onenodempc import OneNodeMpc, mpc_step_one_node
from .threenodempc import ThreeNodeMpc, mpc_step_three_node

CONTROLLERS = {
    'thermostat': Thermostat,
    'one-node': OneNodeMpc,
    'three-node': ThreeNodeMpc,
}
