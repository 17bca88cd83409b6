from ..units import Physics, read_quantity

class OneNodeParams():
    """
    Parameters of the well-mixed tank model: the effective volume V in m3 and
    the insulation conductance U in W/K. The defaults are the values
    identified on well-mixed training data.
    """

    LABELS = ['V', 'U']

    def __init__(self, V=0.156, U=1.27, orig=None):
        if not isinstance(orig, OneNodeParams):
            self.V = V
            self.U = U
        else:
            self.V = orig.V
            self.U = orig.U

        self.validate()

    def validate(self):
        if not self.V > 0:
            raise ValueError('One-node volume must be positive.')
        if not self.U > 0:
            raise ValueError('One-node conductance must be positive.')

    @property
    def C(self):
        return Physics.heat_capacity(self.V)

    @classmethod
    def from_theta(cls, theta):
        return cls(V=float(theta[0]), U=float(theta[1]))

    def to_theta(self):
        return [self.V, self.U]

    @classmethod
    def from_config(cls, section):
        d = cls()
        section = section or {}
        return cls(V=read_quantity(section, 'V', 'volume', d.V),
                   U=float(section.get('U_w_per_k', d.U)))

    def to_config(self):
        return {
            'V_m3': float(self.V),
            'U_w_per_k': float(self.U),
        }
