from .variablelayout import VariableLayout
from .qpproblem import QpProblem
from .qpsolution import QpSolution
from .qpsolver import QpSolver, solve_qp
