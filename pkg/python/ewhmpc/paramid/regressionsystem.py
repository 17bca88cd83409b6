import numpy as np

class UnderdeterminedError(ValueError):
    pass

class RankDeficiencyError(ValueError):
    """
    Raised when the design matrix is rank deficient. `directions` lists the
    unidentifiable parameter combinations as dictionaries of label and
    coefficient.
    """

    def __init__(self, message, rank=None, directions=None):
        super().__init__(message)
        self.rank = rank
        self.directions = directions if directions is not None else []

class RegressionSystem():
    """
    Linear regression z = W theta assembled from sample pairs. Rows are
    grouped by pair, each pair contributes one row per equation.
    """

    def __init__(self, W=None, z=None, labels=None, equations=None, orig=None):
        if not isinstance(orig, RegressionSystem):
            self.W = np.asarray(W, dtype=float)
            self.z = np.asarray(z, dtype=float)
            self.labels = list(labels)
            self.equations = list(equations) if equations is not None else ['energy']
        else:
            self.W = orig.W.copy()
            self.z = orig.z.copy()
            self.labels = list(orig.labels)
            self.equations = list(orig.equations)

        if self.W.ndim != 2 or self.W.shape != (self.z.size, len(self.labels)):
            raise ValueError('Design matrix, target and labels have inconsistent shapes.')
        if self.z.size % len(self.equations) != 0:
            raise ValueError('Rows are not a whole number of equation blocks.')

    @property
    def pair_count(self):
        return self.z.size // len(self.equations)

    def get_equation_rows(self, i):
        """Row indices of the i-th equation of every pair."""
        return np.arange(i, self.z.size, len(self.equations))

    def scale(self, factor):
        """Multiply all energy terms by `factor`, the solution is unchanged."""
        return RegressionSystem(self.W * factor, self.z * factor, self.labels, self.equations)
