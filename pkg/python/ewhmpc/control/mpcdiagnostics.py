import numpy as np
import pandas as pd

class MpcDiagnostics():
    """
    Audit trail of the MPC calls of a closed-loop run: solver status and
    cost, and the predicted first-interval state next to the state realized
    by the plant, filled in at the following call.
    """

    def __init__(self, state_labels=None):
        self.state_labels = state_labels if state_labels is not None else []
        self.records = []

    def reset(self):
        self.records = []

    def record(self, time, solution, predicted, fallback, adjustment):
        self.records.append({
            'time': time,
            'status': solution.status if solution is not None else None,
            'iterations': solution.iterations if solution is not None else None,
            'solve_time': solution.solve_time if solution is not None else None,
            'objective': solution.objective if solution is not None else None,
            'primal_residual': solution.primal_residual if solution is not None else None,
            'dual_residual': solution.dual_residual if solution is not None else None,
            'predicted': None if predicted is None else np.array(predicted),
            'realized': None,
            'fallback': fallback,
            'adjustment': adjustment,
        })

    def set_realized(self, state):
        if len(self.records) > 0 and self.records[-1]['realized'] is None:
            self.records[-1]['realized'] = np.array(state)

    @property
    def fallback_count(self):
        return sum(1 for r in self.records if r['fallback'])

    @property
    def solve_times(self):
        return np.array([r['solve_time'] for r in self.records if r['solve_time'] is not None])

    def get_mismatch(self):
        """Realized minus predicted first-interval state, one row per call."""
        d = [r['realized'] - r['predicted'] for r in self.records
             if r['predicted'] is not None and r['realized'] is not None]
        return np.array(d).reshape(-1, len(self.state_labels))

    def to_dataframe(self):
        rows = []
        for r in self.records:
            row = {k: v for k, v in r.items() if k not in ['predicted', 'realized']}
            for key in ['predicted', 'realized']:
                for i, label in enumerate(self.state_labels):
                    row[f'{key}_{label}'] = r[key][i] if r[key] is not None else np.nan
            rows.append(row)
        return pd.DataFrame(rows)

    def get_summary(self):
        t = self.solve_times
        return {
            'calls': len(self.records),
            'fallbacks': self.fallback_count,
            'solve_time_mean': float(np.mean(t)) if t.size > 0 else None,
            'solve_time_p95': float(np.percentile(t, 95)) if t.size > 0 else None,
            'solve_time_max': float(np.max(t)) if t.size > 0 else None,
        }
