import numpy as np
from scipy import sparse

class QpProblem():
    """
    Sparse convex quadratic program

        minimize    1/2 x' P x + q' x + r
        subject to  A_eq x = b_eq
                    l_in <= A_in x <= u_in

    Infinite entries of `l_in` and `u_in` denote one-sided constraints.
    """

    FORMAT_HEADER = '# ewhmpc sparse QP v1'

    def __init__(self, P=None, q=None, A_eq=None, b_eq=None, A_in=None, l_in=None, u_in=None, r=0.0,
                 layout=None, labels=None, orig=None):

        if not isinstance(orig, QpProblem):
            n = len(q)
            self.P = sparse.csc_matrix(P) if P is not None else sparse.csc_matrix((n, n))
            self.q = np.asarray(q, dtype=float)
            self.A_eq = sparse.csc_matrix(A_eq) if A_eq is not None else sparse.csc_matrix((0, n))
            self.b_eq = np.asarray(b_eq, dtype=float) if b_eq is not None else np.zeros(0)
            self.A_in = sparse.csc_matrix(A_in) if A_in is not None else sparse.csc_matrix((0, n))
            self.l_in = np.asarray(l_in, dtype=float) if l_in is not None else np.zeros(0)
            self.u_in = np.asarray(u_in, dtype=float) if u_in is not None else np.zeros(0)
            self.r = float(r)
            self.layout = layout
            self.labels = labels
        else:
            self.P = orig.P.copy()
            self.q = orig.q.copy()
            self.A_eq = orig.A_eq.copy()
            self.b_eq = orig.b_eq.copy()
            self.A_in = orig.A_in.copy()
            self.l_in = orig.l_in.copy()
            self.u_in = orig.u_in.copy()
            self.r = orig.r
            self.layout = orig.layout
            self.labels = orig.labels

        self.validate()

    @property
    def size(self):
        return self.q.size

    def validate(self):
        n = self.size
        if self.P.shape != (n, n):
            raise ValueError('Quadratic cost has the wrong shape.')
        if self.A_eq.shape != (self.b_eq.size, n):
            raise ValueError('Equality constraints have the wrong shape.')
        if self.A_in.shape != (self.l_in.size, n) or self.u_in.size != self.l_in.size:
            raise ValueError('Inequality constraints have the wrong shape.')
        if np.any(self.l_in > self.u_in):
            raise ValueError('Inequality lower bounds exceed upper bounds.')

        offdiag = self.P - sparse.diags(self.P.diagonal())
        if offdiag.count_nonzero() == 0:
            if np.any(self.P.diagonal() < 0):
                raise ValueError('Quadratic cost is not positive semidefinite.')
        else:
            if abs(self.P - self.P.T).max() > 1e-12 * max(abs(self.P).max(), 1.0):
                raise ValueError('Quadratic cost is not symmetric.')
            if n <= 2000 and np.min(np.linalg.eigvalsh(self.P.toarray())) < -1e-10:
                raise ValueError('Quadratic cost is not positive semidefinite.')

    def objective(self, x):
        return float(0.5 * x @ (self.P @ x) + self.q @ x + self.r)

    def get_osqp_data(self):
        """Stack the constraints into the l <= A x <= u form."""
        A = sparse.vstack([self.A_eq, self.A_in], format='csc')
        l = np.concatenate([self.b_eq, self.l_in])
        u = np.concatenate([self.b_eq, self.u_in])
        return A, l, u

    #region Text format

    def dump(self, filename):
        """
        Write the problem in a sparse text format. Matrices are listed as
        zero-based (row, column, value) triplets, vectors as (index, value)
        pairs.
        """

        def write_matrix(f, name, M):
            M = sparse.coo_matrix(M)
            f.write(f'{name} {M.shape[0]} {M.shape[1]} {M.nnz}\n')
            for i, j, v in zip(M.row, M.col, M.data):
                f.write(f'{i} {j} {v:.17g}\n')

        def write_vector(f, name, v):
            f.write(f'{name} {v.size}\n')
            for i, x in enumerate(v):
                f.write(f'{i} {x:.17g}\n')

        with open(filename, 'w') as f:
            f.write(QpProblem.FORMAT_HEADER + '\n')
            f.write("# minimize 1/2 x'Px + q'x + r  s.t.  Aeq x = beq,  lin <= Ain x <= uin\n")
            f.write(f'r {self.r:.17g}\n')
            write_matrix(f, 'P', self.P)
            write_vector(f, 'q', self.q)
            write_matrix(f, 'Aeq', self.A_eq)
            write_vector(f, 'beq', self.b_eq)
            write_matrix(f, 'Ain', self.A_in)
            write_vector(f, 'lin', self.l_in)
            write_vector(f, 'uin', self.u_in)
            if self.labels is not None:
                f.write(f'labels {len(self.labels)}\n')
                for i, label in enumerate(self.labels):
                    f.write(f'{i} {label}\n')

    @classmethod
    def load(cls, filename):
        with open(filename, 'r') as f:
            lines = [l.strip() for l in f if l.strip() and not l.startswith('#')]

        data = {}
        labels = None
        i = 0
        while i < len(lines):
            parts = lines[i].split()
            name = parts[0]
            if name == 'r':
                data['r'] = float(parts[1])
                i += 1
            elif name in ['P', 'Aeq', 'Ain']:
                m, n, nnz = int(parts[1]), int(parts[2]), int(parts[3])
                t = np.array([lines[i + 1 + k].split() for k in range(nnz)], dtype=float).reshape(-1, 3)
                data[name] = sparse.csc_matrix((t[:, 2], (t[:, 0].astype(int), t[:, 1].astype(int))), shape=(m, n))
                i += 1 + nnz
            elif name in ['q', 'beq', 'lin', 'uin']:
                n = int(parts[1])
                t = np.array([lines[i + 1 + k].split() for k in range(n)], dtype=float).reshape(-1, 2)
                data[name] = t[:, 1]
                i += 1 + n
            elif name == 'labels':
                n = int(parts[1])
                labels = [lines[i + 1 + k].split(' ', 1)[1] for k in range(n)]
                i += 1 + n
            else:
                raise ValueError(f'Unknown section `{name}` in QP file.')

        return cls(P=data['P'], q=data['q'], A_eq=data['Aeq'], b_eq=data['beq'],
                   A_in=data['Ain'], l_in=data['lin'], u_in=data['uin'], r=data.get('r', 0.0),
                   labels=labels)

    #endregion
