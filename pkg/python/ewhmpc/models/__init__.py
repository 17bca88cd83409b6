from .controlmodel import ControlModel, StabilityError
from .onenodeparams import OneNodeParams
from .threenodeparams import ThreeNodeParams
from .onenodemodel import OneNodeModel
from .threenodemodel import ThreeNodeModel

CONTROL_MODELS = {
    'one-node': OneNodeModel,
    'three-node': ThreeNodeModel,
}
