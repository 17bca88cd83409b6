import numpy as np

from ..units import Physics
from .setup_logger import logger
from .runconfig import RunConfig

class AcceptanceCheck():
    """
    Evaluates the behavioral acceptance criteria on a single run or on a
    sweep table. Each result is a dictionary with the criterion, the outcome
    and a message.
    """

    CRITERIA = ['ordering', 'load-shifting', 'comfort', 'forecast-error',
                'overprediction', 'underprediction', 'actuation']
    AXIS_CRITERIA = {
        'volume': ['ordering', 'load-shifting', 'comfort'],
        'alpha': ['comfort', 'forecast-error', 'overprediction', 'underprediction'],
        'volume-alpha': ['ordering', 'load-shifting', 'comfort', 'forecast-error',
                         'overprediction', 'underprediction'],
        'actuation': ['actuation'],
        'lambda': ['load-shifting'],
    }

    ORDERING_VOLUMES = [36.0, 54.0, 72.0]                 # gal/day
    COMFORT_VOLUME = 54.0                                 # gal/day
    ROBUSTNESS_ALPHAS = [0.5, 0.7, 1.0, 1.3, 1.7]

    def __init__(self, T_low=Physics.f_to_k(115.0), T_high=Physics.f_to_k(125.0), offpeak_price=0.21):
        self.T_low = T_low
        self.T_high = T_high
        self.offpeak_price = offpeak_price

        self.results = []

    @property
    def passed(self):
        return all(r['passed'] for r in self.results)

    def add(self, criterion, passed, message):
        passed = bool(passed)
        self.results.append({'criterion': criterion, 'passed': passed, 'message': message})
        if passed:
            logger.info(f'Acceptance criterion {criterion} passed: {message}')
        else:
            logger.warning(f'Acceptance criterion {criterion} failed: {message}')

    #region Single criteria

    def check_load_shifting(self, metrics):
        c = metrics['cost_per_kwh']
        ok = abs(c - self.offpeak_price) <= 0.15 * self.offpeak_price
        self.add('load-shifting', ok, f'three-node average price ${c:.4f}/kWh vs off-peak ${self.offpeak_price:.2f}/kWh')

    def check_comfort(self, metrics):
        lo = self.T_low - Physics.delta_f_to_k(5.0)
        hi = self.T_high + Physics.delta_f_to_k(5.0)
        p10, p90 = metrics['draw_temp_p10_k'], metrics['draw_temp_p90_k']
        ok = lo <= p10 and p90 <= hi
        self.add('comfort', ok, f'{metrics["controller"]} draw temperatures p10 {Physics.k_to_f(p10):.1f} F, '
                                f'p90 {Physics.k_to_f(p90):.1f} F')

    #endregion

    def check_run(self, metrics):
        """Criteria that apply to a single run."""
        m = metrics if isinstance(metrics, dict) else metrics.to_dict()
        if m['controller'] == 'three-node':
            self.check_load_shifting(m)
        self.check_comfort(m)
        return self.passed

    def check_sweep(self, table, axis=None):
        """
        Criteria that apply to a sweep table. The criteria required by the
        sweep `axis` (all of them when None) fail when the table lacks the
        rows they compare.
        """

        required = AcceptanceCheck.AXIS_CRITERIA[axis] if axis is not None else AcceptanceCheck.CRITERIA
        t = table[table['status'] == 'ok'] if 'status' in table.columns else table

        def select(controller, volume=None, alpha=None, actuation=None):
            s = t[t['controller'] == controller]
            if volume is not None:
                s = s[np.isclose(s['daily_volume_gal'], volume)]
            if alpha is not None:
                s = s[np.isclose(s['alpha'], alpha)]
            if actuation is not None:
                s = s[s['actuation'] == actuation]
            return s

        def missing(criterion, what):
            self.add(criterion, False, f'no successful rows for {what}')

        # Controller cost ordering at perfect foresight
        if 'ordering' in required:
            for v in AcceptanceCheck.ORDERING_VOLUMES:
                th = select('thermostat', v, 1.0)
                on = select('one-node', v, 1.0)
                tn = select('three-node', v, 1.0)
                if len(th) > 0 and len(on) > 0 and len(tn) > 0:
                    c_th, c_on, c_tn = th['cost'].iloc[0], on['cost'].iloc[0], tn['cost'].iloc[0]
                    ok = c_tn < c_on < c_th and 1 - c_tn / c_th >= 0.25 and 1 - c_on / c_th >= 0.05
                    self.add('ordering', ok, f'{v:g} gal/day costs three-node ${c_tn:.3f}, one-node ${c_on:.3f}, '
                                             f'thermostat ${c_th:.3f}')
                else:
                    missing('ordering', f'the three controllers at {v:g} gal/day, alpha=1')

        if 'load-shifting' in required:
            rows = select('three-node', alpha=1.0)
            if len(rows) == 0:
                missing('load-shifting', 'three-node at alpha=1')
            for _, row in rows.iterrows():
                self.check_load_shifting(row)

        if 'comfort' in required:
            for c in RunConfig.CONTROLLERS:
                rows = select(c, AcceptanceCheck.COMFORT_VOLUME, 1.0)
                if len(rows) == 0:
                    missing('comfort', f'{c} at {AcceptanceCheck.COMFORT_VOLUME:g} gal/day, alpha=1')
                for _, row in rows.iterrows():
                    self.check_comfort(row)

        # Forecast-error robustness
        tn = select('three-node', AcceptanceCheck.COMFORT_VOLUME)
        th = select('thermostat', AcceptanceCheck.COMFORT_VOLUME)
        on = select('one-node', AcceptanceCheck.COMFORT_VOLUME)

        if 'forecast-error' in required:
            for a in AcceptanceCheck.ROBUSTNESS_ALPHAS:
                r_tn, r_th, r_on = tn[np.isclose(tn['alpha'], a)], th[np.isclose(th['alpha'], a)], on[np.isclose(on['alpha'], a)]
                if len(r_tn) > 0 and len(r_th) > 0 and len(r_on) > 0:
                    c = r_tn['cost_per_kwh_drawn'].iloc[0]
                    ok = c < r_th['cost_per_kwh_drawn'].iloc[0] and c < r_on['cost_per_kwh_drawn'].iloc[0]
                    self.add('forecast-error', ok, f'alpha={a:g} three-node ${c:.4f}/kWh drawn')
                else:
                    missing('forecast-error', f'the three controllers at alpha={a:g}')

        base = tn[np.isclose(tn['alpha'], 1.0)]
        if 'overprediction' in required:
            r = tn[np.isclose(tn['alpha'], 1.5)]
            if len(r) > 0 and len(base) > 0:
                ratio = r['cost'].iloc[0] / base['cost'].iloc[0]
                self.add('overprediction', ratio <= 1.10, f'alpha=1.5 cost ratio {ratio:.3f}')
            else:
                missing('overprediction', 'three-node at alpha=1 and alpha=1.5')

        if 'underprediction' in required:
            r = tn[np.isclose(tn['alpha'], 0.3)]
            if len(r) > 0 and len(base) > 0:
                ok = r['cost'].iloc[0] > base['cost'].iloc[0] and \
                    r['draw_temp_p10_k'].iloc[0] < base['draw_temp_p10_k'].iloc[0]
                self.add('underprediction', ok, 'alpha=0.3 degrades cost and comfort')
            else:
                missing('underprediction', 'three-node at alpha=1 and alpha=0.3')

        # Actuation equivalence
        if 'actuation' in required:
            c = select('three-node', AcceptanceCheck.COMFORT_VOLUME, 1.0, actuation='continuous')
            o = select('three-node', AcceptanceCheck.COMFORT_VOLUME, 1.0, actuation='on-off')
            if len(c) > 0 and len(o) > 0:
                d = abs(c['cost'].iloc[0] - o['cost'].iloc[0]) / o['cost'].iloc[0]
                self.add('actuation', d <= 0.03, f'continuous vs on-off cost difference {100 * d:.2f}%')
            else:
                missing('actuation', 'three-node in both actuation modes')

        return self.passed
