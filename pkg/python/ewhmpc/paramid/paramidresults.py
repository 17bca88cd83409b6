import json
import numpy as np

from .setup_logger import logger

class ParamIdResults():
    """
    Estimated parameters with the regression diagnostics and the
    plausibility report. Implausible estimates are reported, not corrected.
    """

    def __init__(self, theta=None, labels=None, rank=None, condition_number=None,
                 rms_residuals=None, pair_count=None, model=None, V_total=None, orig=None):

        if not isinstance(orig, ParamIdResults):
            self.theta = np.asarray(theta, dtype=float)
            self.labels = list(labels)
            self.rank = rank
            self.condition_number = condition_number
            self.rms_residuals = rms_residuals if rms_residuals is not None else {}
            self.pair_count = pair_count
            self.model = model
            self.V_total = V_total
        else:
            self.theta = orig.theta.copy()
            self.labels = list(orig.labels)
            self.rank = orig.rank
            self.condition_number = orig.condition_number
            self.rms_residuals = dict(orig.rms_residuals)
            self.pair_count = orig.pair_count
            self.model = orig.model
            self.V_total = orig.V_total

        self.warnings = []

    def get_value(self, label):
        return float(self.theta[self.labels.index(label)])

    def check_plausibility(self, V_total=None):
        """Collect warnings about non-positive estimates and volumes exceeding the tank."""

        V_total = V_total if V_total is not None else self.V_total
        self.V_total = V_total
        self.warnings = []

        for label, value in zip(self.labels, self.theta):
            if not value > 0:
                self.warnings.append(f'Estimated `{label}` = {value:.4g} is not positive.')

        if V_total is not None:
            volumes = [v for l, v in zip(self.labels, self.theta) if l.startswith('V')]
            if len(volumes) == 1 and volumes[0] > V_total:
                self.warnings.append(f'Estimated volume {volumes[0]:.4g} m3 exceeds the tank volume {V_total:.4g} m3.')
            elif len(volumes) > 1 and sum(volumes) >= V_total:
                self.warnings.append(f'Estimated volumes add up to {sum(volumes):.4g} m3, '
                                     f'leaving no lower volume in a {V_total:.4g} m3 tank.')

        for w in self.warnings:
            logger.warning(w)

        return self.warnings

    @property
    def is_plausible(self):
        return len(self.warnings) == 0

    def to_params(self):
        """Parameter object of the estimates, raises ValueError when they are unphysical."""
        return self.model.get_params(self.theta, self.V_total)

    def to_config(self):
        return self.to_params().to_config()

    def to_dict(self):
        return {
            'parameters': {l: float(v) for l, v in zip(self.labels, self.theta)},
            'V_total_m3': self.V_total,
            'rank': self.rank,
            'condition_number': self.condition_number,
            'rms_residuals_j': self.rms_residuals,
            'pair_count': self.pair_count,
            'warnings': self.warnings,
        }

    def to_json(self, filename=None):
        s = json.dumps(self.to_dict(), indent=2)
        if filename is not None:
            with open(filename, 'w') as f:
                f.write(s)
        return s
