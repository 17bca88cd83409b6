from dataclasses import dataclass

from ..units import Physics

@dataclass(frozen=True)
class DrawEvent():
    """Constant-rate draw starting at `start` seconds after midnight."""

    start: float        # s of day
    duration: float     # s
    rate: float         # m3/s

    def __post_init__(self):
        if not 0 <= self.start < Physics.S_PER_DAY:
            raise ValueError(f'Draw start {self.start} s is outside of the day.')
        if not self.duration > 0:
            raise ValueError('Draw duration must be positive.')
        if not self.rate >= 0:
            raise ValueError('Draw rate must be non-negative.')

    @property
    def end(self):
        return self.start + self.duration

    @property
    def volume(self):
        return self.rate * self.duration

    def scale_duration(self, factor):
        return DrawEvent(self.start, self.duration * factor, self.rate)
