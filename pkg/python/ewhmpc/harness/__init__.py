from .runconfig import RunConfig
from .runmetrics import RunMetrics
from .metricscollector import MetricsCollector, compute_embodied_energy, weighted_percentile
from .closedlooptrace import ClosedLoopTrace
from .trajectorylog import TrajectoryLog
from .closedloop import ClosedLoop, RunError, run_closed_loop
from .sweep import Sweep
from .acceptancecheck import AcceptanceCheck
