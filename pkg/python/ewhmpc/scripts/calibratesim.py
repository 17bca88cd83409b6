from ..util import get_section
from ..units import TankSpec, AmbientConditions
from ..tank import TankCalibration
from .script import Script

class CalibrateSim(Script):
    """Tune the simulator conductances and write the `sim` section."""

    def __init__(self):
        super().__init__()
        self.calibration = None

    def add_args(self, parser):
        super().add_args(parser)
        TankCalibration().add_args(parser)

    def init_from_args(self, args):
        super().init_from_args(args)
        spec = TankSpec.from_config(get_section(self.config, 'tank'))
        ambient = AmbientConditions.from_config(get_section(self.config, 'ambient'))
        self.calibration = TankCalibration(spec, ambient)
        self.calibration.init_from_config(get_section(self.config, 'calibrate'))
        self.calibration.init_from_args(args)

    def run(self):
        params, report = self.calibration.calibrate()
        self.save_config({'sim': params.to_config()})
        self.save_json(report, 'calibration.json')
