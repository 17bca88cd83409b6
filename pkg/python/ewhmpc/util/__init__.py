from .args import get_arg, is_arg
from .config import ConfigError, CONFIG_SECTIONS, load_config, merge_config, apply_overrides, get_section, save_config
from .isotonic import is_monotone, pool_adjacent_violators
from .smartparallel import SmartParallel
