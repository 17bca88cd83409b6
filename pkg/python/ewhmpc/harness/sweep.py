import numpy as np
import pandas as pd
from tqdm import tqdm

from ..units import Physics
from ..util import SmartParallel, get_arg, get_section
from .setup_logger import logger
from .runconfig import RunConfig
from .runmetrics import RunMetrics
from .closedloop import ClosedLoop

def run_sweep_point(item):
    index, config, point = item
    cfg = RunConfig(orig=config)
    cfg.controller = point['controller']
    cfg.daily_volume = Physics.gal_to_m3(point['daily_volume_gal'])
    cfg.alpha = point['alpha']
    cfg.actuation = point['actuation']
    if point.get('lambda') is not None:
        cfg.config['mpc'] = dict(get_section(cfg.config, 'mpc'), **{'lambda': point['lambda']})
    cfg.validate()
    metrics = ClosedLoop(cfg).run()
    return index, metrics.to_dict(), None

def handle_sweep_error(item, ex):
    index, _, point = item
    logger.error(f'Sweep point {point} failed: {ex}')
    return index, None, str(ex)

class Sweep():
    """
    Closed-loop runs over a grid of daily volumes, forecast scale factors,
    actuation modes or deadband penalty weights, for a list of controllers.
    The thermostat uses neither the forecast nor the penalty weight, so along
    an alpha or lambda axis it runs once per volume and its row is replicated.
    """

    AXES = ['volume', 'alpha', 'volume-alpha', 'actuation', 'lambda']

    def __init__(self, config=None, axis='volume', controllers=None, orig=None):
        if not isinstance(orig, Sweep):
            self.config = config if config is not None else RunConfig()
            self.axis = axis
            self.controllers = controllers if controllers is not None else list(RunConfig.CONTROLLERS)
            self.volumes = [28.8, 36.0, 42.0, 48.0, 54.0, 60.0, 66.0, 72.0]     # gal/day
            self.alphas = [0.3, 0.5, 0.7, 1.0, 1.3, 1.5, 1.7]
            self.lambdas = [0.01, 0.02, 0.05, 0.1, 0.2, 0.5]                   # $/K^2
            self.alpha_volume = 54.0                                    # gal/day, volume of the alpha, actuation and lambda axes
            self.parallel = True
            self.threads = None
        else:
            self.config = config if config is not None else orig.config
            self.axis = orig.axis
            self.controllers = list(orig.controllers)
            self.volumes = list(orig.volumes)
            self.alphas = list(orig.alphas)
            self.lambdas = list(orig.lambdas)
            self.alpha_volume = orig.alpha_volume
            self.parallel = orig.parallel
            self.threads = orig.threads

        if self.axis not in Sweep.AXES:
            raise NotImplementedError(f'Sweep axis `{self.axis}` is not supported.')

    def add_args(self, parser):
        parser.add_argument('--axis', type=str, choices=Sweep.AXES, help='Sweep axis.\n')
        parser.add_argument('--controllers', type=str, nargs='*', help='Controllers to run.\n')
        parser.add_argument('--volumes-gal', type=float, nargs='+', help='Daily volumes in gal.\n')
        parser.add_argument('--alphas', type=float, nargs='+', help='Forecast scale factors.\n')
        parser.add_argument('--lambdas', type=float, nargs='+', help='Deadband penalty weights in $/K^2.\n')
        parser.add_argument('--threads', type=int, help='Number of worker processes.\n')
        parser.add_argument('--no-parallel', action='store_true', help='Run the points in-process.\n')

    def init_from_args(self, args):
        self.axis = get_arg('axis', self.axis, args)
        self.controllers = get_arg('controllers', self.controllers, args)
        self.volumes = get_arg('volumes_gal', self.volumes, args)
        self.alphas = get_arg('alphas', self.alphas, args)
        self.lambdas = get_arg('lambdas', self.lambdas, args)
        self.threads = get_arg('threads', self.threads, args)
        if get_arg('no_parallel', False, args):
            self.parallel = False

    def init_from_config(self, section):
        section = section or {}
        self.axis = section.get('axis', self.axis)
        self.controllers = section.get('controllers', self.controllers)
        self.volumes = section.get('volumes_gal', self.volumes)
        self.alphas = section.get('alphas', self.alphas)
        self.lambdas = section.get('lambdas', self.lambdas)
        self.alpha_volume = section.get('alpha_volume_gal', self.alpha_volume)
        self.parallel = section.get('parallel', self.parallel)
        self.threads = section.get('threads', self.threads)

    def get_points(self):
        """
        List the sweep rows as (point, run key) pairs. Rows with the same run
        key share a single closed-loop run.
        """

        a = self.config.alpha
        act = self.config.actuation
        if self.axis == 'volume':
            grid = [(v, a, act, None) for v in self.volumes]
        elif self.axis == 'alpha':
            grid = [(self.alpha_volume, x, act, None) for x in self.alphas]
        elif self.axis == 'volume-alpha':
            grid = [(v, x, act, None) for v in self.volumes for x in self.alphas]
        elif self.axis == 'actuation':
            grid = [(self.alpha_volume, a, x, None) for x in RunConfig.ACTUATIONS]
        elif self.axis == 'lambda':
            grid = [(self.alpha_volume, a, act, x) for x in self.lambdas]
        else:
            raise NotImplementedError()

        rows = []
        for c in self.controllers:
            for v, x, ac, lam in grid:
                point = {'controller': c, 'daily_volume_gal': float(v), 'alpha': float(x), 'actuation': ac}
                if lam is not None:
                    point['lambda'] = float(lam)
                # The thermostat ignores the forecast and the penalty weight
                run_alpha = 1.0 if c == 'thermostat' else float(x)
                run_lam = None if c == 'thermostat' or lam is None else float(lam)
                key = (c, float(v), run_alpha, ac, run_lam)
                rows.append((point, key))
        return rows

    def run(self, progress=False):
        rows = self.get_points()

        runs = {}
        for point, key in rows:
            if key not in runs:
                runs[key] = dict(point, alpha=key[2], **{'lambda': key[4]})
        keys = list(runs.keys())
        items = [(i, self.config, runs[k]) for i, k in enumerate(keys)]

        logger.info(f'Sweeping `{self.axis}` with {len(rows)} rows in {len(items)} closed-loop runs.')

        results = {}
        with SmartParallel(verbose=False, parallel=self.parallel, threads=self.threads) as p:
            for index, metrics, error in tqdm(p.map(run_sweep_point, handle_sweep_error, items),
                                              total=len(items), disable=not progress):
                results[index] = (metrics, error)

        table = []
        for i, (point, key) in enumerate(rows):
            metrics, error = results[keys.index(key)]
            row = {'point': i}
            row.update(point)
            row['status'] = 'ok' if error is None else 'failed'
            row['error'] = error
            if metrics is not None:
                row.update({k: v for k, v in metrics.items() if k not in point})
            table.append(row)

        point_columns = ['controller', 'daily_volume_gal', 'alpha', 'actuation']
        if self.axis == 'lambda':
            point_columns.append('lambda')
        columns = ['point'] + point_columns + ['status', 'error'] \
            + [f for f in RunMetrics.FIELDS if f not in point_columns]
        return pd.DataFrame(table, columns=columns)
