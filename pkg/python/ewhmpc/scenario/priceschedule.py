import numpy as np

from ..units import Physics, read_quantity

class PriceSchedule():
    """
    Piecewise-constant daily electricity price in $/kWh. `breakpoints` are
    the seconds of day where each price begins, the first one is midnight.
    """

    def __init__(self, breakpoints=None, prices=None, orig=None):
        if not isinstance(orig, PriceSchedule):
            self.breakpoints = np.array(breakpoints if breakpoints is not None else [0.0], dtype=float)
            self.prices = np.array(prices if prices is not None else [0.21], dtype=float)
        else:
            self.breakpoints = orig.breakpoints.copy()
            self.prices = orig.prices.copy()

        self.validate()

    def validate(self):
        if self.breakpoints.size != self.prices.size or self.prices.size == 0:
            raise ValueError('Each price requires a breakpoint.')
        if self.breakpoints[0] != 0 or np.any(np.diff(self.breakpoints) <= 0) \
            or self.breakpoints[-1] >= Physics.S_PER_DAY:
            raise ValueError('Price breakpoints must start at midnight and increase within the day.')
        if np.any(self.prices <= 0):
            raise ValueError('Prices must be positive.')

    @classmethod
    def flat(cls, price):
        return cls([0.0], [price])

    @classmethod
    def tou(cls, peak_price=0.47, offpeak_price=0.21, peak_start=17 * 3600.0, peak_end=20 * 3600.0):
        if not 0 < peak_start < peak_end < Physics.S_PER_DAY:
            raise ValueError('Peak window must lie within the day.')
        return cls([0.0, peak_start, peak_end], [offpeak_price, peak_price, offpeak_price])

    @classmethod
    def from_config(cls, section):
        section = section or {}
        kind = section.get('prices', 'tou')
        if kind == 'tou':
            return cls.tou(
                peak_price=float(section.get('peak_price', 0.47)),
                offpeak_price=float(section.get('offpeak_price', 0.21)),
                peak_start=read_quantity(section, 'peak_start', 'time', 17 * 3600.0),
                peak_end=read_quantity(section, 'peak_end', 'time', 20 * 3600.0))
        elif kind == 'flat':
            return cls.flat(float(section.get('flat_price', 0.21)))
        else:
            raise NotImplementedError(f'Price schedule `{kind}` is not supported.')

    def price_at(self, t):
        s = np.mod(t, Physics.S_PER_DAY)
        idx = np.searchsorted(self.breakpoints, s, side='right') - 1
        return self.prices[idx]

    def price_vector(self, start, N, dt):
        """Price at the start of each of the N control intervals."""
        return self.price_at(start + dt * np.arange(N))

    def is_peak(self, t):
        """True where the price is the highest of a non-flat schedule."""
        p = self.price_at(t)
        return np.logical_and(p == self.prices.max(), self.prices.max() > self.prices.min())
