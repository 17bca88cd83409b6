import numpy as np

class VariableLayout():
    """
    Decision vector of a horizon-N problem stored as consecutive per-timestep
    blocks. Block j holds the states x_j, the controls u_j (only for j < N)
    and the two deadband slacks s_lo_j, s_hi_j.
    """

    def __init__(self, state_count, control_count, N, slack_count=2):
        self.state_count = state_count
        self.control_count = control_count
        self.slack_count = slack_count
        self.N = N

        sizes = [state_count + control_count + slack_count] * N + [state_count + slack_count]
        self.offsets = np.concatenate([[0], np.cumsum(sizes)]).astype(int)

    @property
    def size(self):
        return int(self.offsets[-1])

    def x(self, j, k=0):
        return int(self.offsets[j] + k)

    def u(self, j, k=0):
        if j >= self.N:
            raise IndexError('No controls in the terminal block.')
        return int(self.offsets[j] + self.state_count + k)

    def s_lo(self, j):
        return int(self.offsets[j + 1] - self.slack_count)

    def s_hi(self, j):
        return int(self.offsets[j + 1] - self.slack_count + 1)

    def block(self, j):
        return int(self.offsets[j]), int(self.offsets[j + 1])

    def get_states(self, v):
        return np.array([[v[self.x(j, k)] for k in range(self.state_count)] for j in range(self.N + 1)])

    def get_controls(self, v):
        return np.array([[v[self.u(j, k)] for k in range(self.control_count)] for j in range(self.N)])

    def get_slacks(self, v):
        return np.array([[v[self.s_lo(j)], v[self.s_hi(j)]] for j in range(self.N + 1)])

    def pack(self, states, controls, slacks):
        v = np.zeros(self.size)
        for j in range(self.N + 1):
            for k in range(self.state_count):
                v[self.x(j, k)] = states[j, k]
            if j < self.N:
                for k in range(self.control_count):
                    v[self.u(j, k)] = controls[j, k]
            v[self.s_lo(j)] = slacks[j, 0]
            v[self.s_hi(j)] = slacks[j, 1]
        return v

    def labels(self, state_labels, control_labels):
        labels = []
        for j in range(self.N + 1):
            labels += [f'{s}[{j}]' for s in state_labels]
            if j < self.N:
                labels += [f'{u}[{j}]' for u in control_labels]
            labels += [f's_lo[{j}]', f's_hi[{j}]']
        return labels
