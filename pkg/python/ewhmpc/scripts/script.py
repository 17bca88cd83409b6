import os
import sys
import json
import shlex
import logging
import numpy as np

from ..setup_logger import logger
from ..util import load_config, apply_overrides, save_config, ConfigError

class CheckFailedError(Exception):
    pass

class Script():
    """
    Base class of the command-line subcommands. Loads the layered YAML
    configuration, applies the overrides, sets up logging to the console
    and to the output directory and records the command line.
    """

    def __init__(self):
        self.args = None
        self.config = None
        self.outdir = None
        self.progress = True
        self.log_handlers = []

    def add_args(self, parser):
        parser.add_argument('--config', type=str, nargs='+', help='YAML configuration files, later ones override.\n')
        parser.add_argument('--set', type=str, action='append', dest='overrides', metavar='SECTION.KEY=VALUE',
                            help='Override a configuration value.\n')
        parser.add_argument('--out', type=str, default='.', help='Output directory.\n')
        parser.add_argument('--log-level', type=str, default='INFO', help='Logging level.\n')
        parser.add_argument('--debug', action='store_true', help='Verbose logging.\n')
        parser.add_argument('--no-progress', action='store_true', help='Disable progress bars.\n')

    def init_from_args(self, args):
        self.args = args

        config = load_config(*args['config']) if args.get('config') else {}
        self.config = apply_overrides(config, args.get('overrides'))

        self.outdir = args.get('out') or '.'
        os.makedirs(self.outdir, exist_ok=True)
        self.progress = not args.get('no_progress', False) and sys.stderr.isatty()

    def setup_logging(self):
        level = logging.DEBUG if self.args.get('debug') else getattr(logging, str(self.args.get('log_level', 'INFO')).upper(), None)
        if not isinstance(level, int):
            raise ConfigError(f'Unknown log level `{self.args.get("log_level")}`.')

        formatter = logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s')
        root = logging.getLogger()
        root.setLevel(level)
        for h in [logging.StreamHandler(), logging.FileHandler(os.path.join(self.outdir, 'command.log'))]:
            h.setFormatter(formatter)
            root.addHandler(h)
            self.log_handlers.append(h)

    def teardown_logging(self):
        root = logging.getLogger()
        for h in self.log_handlers:
            root.removeHandler(h)
            h.close()
        self.log_handlers = []

    def save_command_line(self):
        with open(os.path.join(self.outdir, 'command.sh'), 'w') as f:
            f.write(' '.join(shlex.quote(a) for a in sys.argv) + '\n')

    def save_config(self, config=None):
        save_config(config if config is not None else self.config, os.path.join(self.outdir, 'config.yaml'))

    def save_json(self, obj, filename):
        def default(o):
            if isinstance(o, np.generic):
                return o.item()
            if isinstance(o, np.ndarray):
                return o.tolist()
            raise TypeError(f'Object of type {type(o)} is not serializable.')

        with open(os.path.join(self.outdir, filename), 'w') as f:
            json.dump(obj, f, indent=2, default=default)

    def execute(self, args):
        try:
            self.init_from_args(args)
        except ConfigError:
            raise
        except ValueError as ex:
            raise ConfigError(str(ex)) from ex
        self.setup_logging()
        try:
            self.save_command_line()
            logger.info(f'Executing `{type(self).__name__}`, writing output to `{self.outdir}`.')
            self.run()
        finally:
            self.teardown_logging()

    def run(self):
        raise NotImplementedError()
