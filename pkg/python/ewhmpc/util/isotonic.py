import numpy as np
from scipy.optimize import isotonic_regression

def is_monotone(values):
    return bool(np.all(values[1:] >= values[:-1]))

def pool_adjacent_violators(values, weights=None):
    """
    Weighted isotonic (non-decreasing) projection of a vector. Inverted runs
    are replaced by their weighted mean, so the weighted mean of the vector
    is preserved.
    """

    values = np.asarray(values, dtype=float)
    if is_monotone(values):
        return values.copy()
    if weights is not None:
        weights = np.asarray(weights, dtype=float)
    return isotonic_regression(values, weights=weights, increasing=True).x
