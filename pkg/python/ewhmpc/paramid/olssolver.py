import numpy as np
import scipy.linalg

from .setup_logger import logger
from .regressionsystem import RankDeficiencyError
from .paramidresults import ParamIdResults

class OlsSolver():
    """
    Ordinary least squares with column equilibration. The columns of the
    design matrix are scaled to unit norm before the solve, the rank and the
    condition number are computed from the singular values of the scaled
    matrix.
    """

    def __init__(self, rtol=1e-10, null_threshold=0.1, orig=None):
        if not isinstance(orig, OlsSolver):
            self.rtol = rtol
            self.null_threshold = null_threshold
        else:
            self.rtol = orig.rtol
            self.null_threshold = orig.null_threshold

    def get_null_directions(self, Vt, s, scale, labels):
        directions = []
        for i in range(Vt.shape[0]):
            if i < s.size and s[i] > self.rtol * s[0]:
                continue
            d = Vt[i] / np.where(scale > 0, scale, 1.0)
            d /= np.max(np.abs(d))
            directions.append({labels[k]: float(d[k]) for k in range(d.size) if abs(d[k]) > self.null_threshold})
        return directions

    def solve(self, system):
        W, z = system.W, system.z
        n = W.shape[1]

        scale = np.linalg.norm(W, axis=0)
        Ws = W / np.where(scale > 0, scale, 1.0)

        _, s, Vt = scipy.linalg.svd(Ws, full_matrices=True)
        rank = int(np.sum(s > self.rtol * s[0])) if s.size > 0 and s[0] > 0 else 0
        if rank < n:
            directions = self.get_null_directions(Vt, s, scale, system.labels)
            logger.warning(f'Design matrix has rank {rank} < {n}, unidentifiable directions: {directions}')
            raise RankDeficiencyError(f'Design matrix has rank {rank}, {n} parameters requested.',
                                      rank=rank, directions=directions)

        theta_s, _, _, _ = scipy.linalg.lstsq(Ws, z)
        theta = theta_s / scale

        residual = z - W @ theta
        rms = {}
        for i, name in enumerate(system.equations):
            r = residual[system.get_equation_rows(i)]
            rms[name] = float(np.sqrt(np.mean(r ** 2)))

        return ParamIdResults(theta=theta, labels=system.labels,
                              rank=rank, condition_number=float(s[0] / s[n - 1]),
                              rms_residuals=rms, pair_count=system.pair_count)

def ols_solve(system):
    return OlsSolver().solve(system)
