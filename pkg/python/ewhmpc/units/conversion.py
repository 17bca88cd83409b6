import numpy as np

from .physics import Physics

class UnitError(ValueError):
    pass

def _identity(x):
    return x

def _scale(factor):
    return (lambda x: x * factor), (lambda x: x / factor)

# Each unit maps to its dimension and a pair of to-SI, from-SI functions
UNITS = {
    'K': ('temperature', _identity, _identity),
    'F': ('temperature', Physics.f_to_k, Physics.k_to_f),
    'C': ('temperature', Physics.c_to_k, Physics.k_to_c),
    'm3': ('volume', _identity, _identity),
    'gal': ('volume', Physics.gal_to_m3, Physics.m3_to_gal),
    'L': ('volume', *_scale(Physics.M3_PER_L)),
    'J': ('energy', _identity, _identity),
    'kWh': ('energy', Physics.kwh_to_j, Physics.j_to_kwh),
    'Wh': ('energy', *_scale(Physics.J_PER_WH)),
    's': ('time', _identity, _identity),
    'min': ('time', *_scale(Physics.S_PER_MIN)),
    'h': ('time', Physics.h_to_s, Physics.s_to_h),
    'W': ('power', _identity, _identity),
    'kW': ('power', Physics.kw_to_w, Physics.w_to_kw),
    'm3/s': ('flow', _identity, _identity),
    'gpm': ('flow', Physics.gpm_to_m3s, Physics.m3s_to_gpm),
}

UNIT_ALIASES = {
    '°F': 'F', 'degF': 'F',
    '°C': 'C', 'degC': 'C',
    'm^3': 'm3', 'l': 'L',
    'kwh': 'kWh', 'wh': 'Wh',
    'sec': 's', 'hr': 'h',
    'kw': 'kW', 'w': 'W',
    'm3s': 'm3/s',
}

# Config key suffixes, e.g. `t_ambient_f = 70`
KEY_SUFFIXES = {
    'k': 'K', 'f': 'F', 'c': 'C',
    'm3': 'm3', 'gal': 'gal', 'l': 'L',
    'j': 'J', 'kwh': 'kWh', 'wh': 'Wh',
    's': 's', 'min': 'min', 'h': 'h',
    'w': 'W', 'kw': 'kW',
    'm3s': 'm3/s', 'gpm': 'gpm',
}

SI_UNITS = {
    'temperature': 'K',
    'volume': 'm3',
    'energy': 'J',
    'time': 's',
    'power': 'W',
    'flow': 'm3/s',
}

def normalize_unit(unit):
    unit = UNIT_ALIASES.get(unit, unit)
    if unit not in UNITS:
        raise UnitError(f'Unsupported unit `{unit}`.')
    return unit

def convert_units(value, from_unit, to_unit):
    """
    Convert a scalar or array between two units of the same dimension.

    Parameters
    ----------
    value : float or array
        Value in `from_unit`
    from_unit : str
        Unit identifier, see `UNITS`
    to_unit : str
        Unit identifier, see `UNITS`

    Returns
    -------
    float or array
        Value in `to_unit`
    """

    from_unit = normalize_unit(from_unit)
    to_unit = normalize_unit(to_unit)

    from_dim, to_si, _ = UNITS[from_unit]
    to_dim, _, from_si = UNITS[to_unit]

    if from_dim != to_dim:
        raise UnitError(f'Cannot convert `{from_unit}` ({from_dim}) to `{to_unit}` ({to_dim}).')

    if from_unit == to_unit:
        return value
    else:
        return from_si(to_si(value))

def read_quantity(section, name, dimension, default=None):
    """
    Read a unit-suffixed value from a configuration section and convert it to SI.
    For example, `read_quantity(section, 't_ambient', 'temperature')` accepts any of
    `t_ambient_k`, `t_ambient_f` or `t_ambient_c`. Values can also be lists.
    """

    if section is None:
        return default

    found = []
    for suffix, unit in KEY_SUFFIXES.items():
        key = f'{name}_{suffix}'
        if key in section and UNITS[unit][0] == dimension:
            found.append((key, unit))

    if len(found) == 0:
        return default
    elif len(found) > 1:
        raise UnitError(f'Quantity `{name}` is given more than once: {", ".join(k for k, _ in found)}.')

    key, unit = found[0]
    value = section[key]
    if value is None:
        return default
    elif isinstance(value, (list, tuple)):
        value = np.array(value, dtype=float)
    else:
        value = float(value)

    return convert_units(value, unit, SI_UNITS[dimension])

def quantity_keys(name, dimension):
    """List every accepted config key for a quantity."""
    return [f'{name}_{s}' for s, u in KEY_SUFFIXES.items() if UNITS[u][0] == dimension]
