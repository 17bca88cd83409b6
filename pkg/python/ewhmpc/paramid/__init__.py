from .iddataset import IdDataset
from .regressionsystem import RegressionSystem, UnderdeterminedError, RankDeficiencyError
from .onenoderegression import OneNodeRegression, build_regression_one_node
from .threenoderegression import ThreeNodeRegression, build_regression_three_node
from .paramidresults import ParamIdResults
from .olssolver import OlsSolver, ols_solve
from .idexperiment import IdExperiment
from .identification import identify
