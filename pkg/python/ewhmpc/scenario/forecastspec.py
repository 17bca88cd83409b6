from dataclasses import dataclass

@dataclass(frozen=True)
class ForecastSpec():
    """
    Forecast of the draw flow as hourly mean flow of the true profile scaled
    by `alpha`. Perfect foresight of the hourly totals is alpha = 1.
    """

    alpha: float = 1.0
    aggregation: str = 'hourly'

    AGGREGATIONS = ['hourly']

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError('Forecast scale factor must be positive.')
        if self.aggregation not in ForecastSpec.AGGREGATIONS:
            raise NotImplementedError(f'Forecast aggregation `{self.aggregation}` is not supported.')

    @classmethod
    def from_config(cls, section):
        section = section or {}
        return cls(alpha=float(section.get('alpha', 1.0)),
                   aggregation=section.get('aggregation', 'hourly'))
