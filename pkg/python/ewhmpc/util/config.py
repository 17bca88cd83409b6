import os
import copy
import yaml

class ConfigError(ValueError):
    pass

CONFIG_SECTIONS = [
    'tank', 'ambient', 'sim',
    'one_node', 'three_node',
    'mpc', 'thermostat',
    'scenario', 'run',
    'sweep', 'identify', 'calibrate',
]

def merge_config(base, update):
    """Merge `update` into a copy of `base`, section by key."""

    result = copy.deepcopy(base)
    for section, values in (update or {}).items():
        if isinstance(values, dict) and isinstance(result.get(section), dict):
            result[section].update(copy.deepcopy(values))
        else:
            result[section] = copy.deepcopy(values)
    return result

def validate_config(config):
    for section, values in config.items():
        if section not in CONFIG_SECTIONS:
            raise ConfigError(f'Unknown configuration section `{section}`.')
        if values is not None and not isinstance(values, dict):
            raise ConfigError(f'Configuration section `{section}` must be a mapping.')
    return config

def load_config(*filenames):
    """
    Load and layer YAML configuration files, later files override earlier ones.
    """

    config = {}
    for fn in filenames:
        if not os.path.isfile(fn):
            raise ConfigError(f'Configuration file `{fn}` does not exist.')
        with open(fn, 'r') as f:
            try:
                c = yaml.safe_load(f)
            except yaml.YAMLError as ex:
                raise ConfigError(f'Cannot parse configuration file `{fn}`: {ex}')
        if c is None:
            continue
        if not isinstance(c, dict):
            raise ConfigError(f'Configuration file `{fn}` must contain a mapping of sections.')
        config = merge_config(config, c)

    return validate_config(config)

def apply_overrides(config, overrides):
    """
    Apply `section.key=value` overrides, values are parsed as YAML.
    """

    config = copy.deepcopy(config)
    for o in overrides or []:
        if '=' not in o:
            raise ConfigError(f'Invalid override `{o}`, expected `section.key=value`.')
        path, value = o.split('=', 1)
        if '.' not in path:
            raise ConfigError(f'Invalid override `{o}`, expected `section.key=value`.')
        section, key = path.split('.', 1)
        try:
            value = yaml.safe_load(value)
        except yaml.YAMLError as ex:
            raise ConfigError(f'Cannot parse override `{o}`: {ex}')
        if section not in config or config[section] is None:
            config[section] = {}
        config[section][key] = value

    return validate_config(config)

def get_section(config, name):
    s = config.get(name) if config is not None else None
    return s if s is not None else {}

def save_config(config, filename):
    with open(filename, 'w') as f:
        yaml.safe_dump(config, f, sort_keys=False)
