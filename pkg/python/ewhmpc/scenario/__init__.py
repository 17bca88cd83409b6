from .drawevent import DrawEvent
from .drawprofile import DrawProfile
from .priceschedule import PriceSchedule
from .forecastspec import ForecastSpec
from .forecaster import Forecaster, make_forecast

def synth_profile(daily_volume, base=None):
    base = base if base is not None else DrawProfile.base()
    return base.synth_profile(daily_volume)
