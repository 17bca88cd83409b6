import numpy as np
from tqdm import tqdm

from ..units import Physics, UnitError
from ..util import ConfigError
from ..tank import TankSim, EnergyBalance
from ..control import OnOffConverter, MpcController
from ..scenario import Forecaster
from .setup_logger import logger
from .metricscollector import MetricsCollector
from .trajectorylog import TrajectoryLog

class RunError(RuntimeError):
    """Failure of a closed-loop run with the context it happened in."""

    def __init__(self, message, controller=None, scenario=None, time=None):
        super().__init__(message)
        self.controller = controller
        self.scenario = scenario
        self.time = time

class ClosedLoop():
    """
    Closed-loop simulation of a controller and the tank simulator. The
    simulator advances every `sim_dt`, the controller is called at its own
    period with the sensor readings, the forecast and the prices of its
    horizon. Average-power commands are converted to on/off schedules in
    on-off actuation mode. Metrics are evaluated over the final day.
    """

    def __init__(self, config, trace=None, progress=False):
        self.config = config
        self.trace = trace
        self.progress = progress

        self.time = None
        self.controller = None
        self.metrics = None

    def get_scenario_name(self):
        return f'{self.config.get_daily_volume_gal():.1f} gal/day, alpha={self.config.alpha:g}'

    def run(self):
        try:
            return self.run_loop()
        except (RunError, ConfigError, UnitError):
            raise
        except Exception as ex:
            msg = (f'Closed-loop run of `{self.config.controller}` ({self.get_scenario_name()}) '
                   f'failed at t={self.time} s: {ex}')
            raise RunError(msg, controller=self.config.controller,
                           scenario=self.get_scenario_name(), time=self.time) from ex

    def run_loop(self):
        cfg = self.config
        cfg.validate()
        spec = cfg.create_tank_spec()
        ambient = cfg.create_ambient()
        sim = TankSim(spec, cfg.create_sim_params(spec), ambient)
        controller = cfg.create_controller(spec, ambient)
        controller.reset()
        profile = cfg.create_profile()
        prices = cfg.create_prices()
        forecaster = Forecaster(profile, cfg.create_forecast_spec())
        self.controller = controller

        sim_dt = sim.params.sim_dt
        day_steps = int(round(Physics.S_PER_DAY / sim_dt))
        n = cfg.days * day_steps
        period_steps = int(round(controller.period / sim_dt))
        log_steps = int(round(cfg.log_interval / sim_dt))
        if abs(period_steps * sim_dt - controller.period) > 1e-9 * controller.period:
            raise ValueError(f'Controller period {controller.period} s is not a multiple of the simulation step.')
        if abs(log_steps * sim_dt - cfg.log_interval) > 1e-9 * cfg.log_interval:
            raise ValueError(f'Log interval {cfg.log_interval} s is not a multiple of the simulation step.')

        flow = profile.flow_per_step(sim_dt, n)
        sim.check_flow(float(np.max(flow)))

        converter = OnOffConverter(controller.period, sim_dt) if cfg.actuation == 'on-off' else None
        N = controller.horizon_steps

        self.p_lower = np.zeros(n)
        self.p_upper = np.zeros(n)
        self.flow = flow
        self.t_out = np.zeros(n)

        state = sim.init_state_closed_loop(cfg.t_init)
        self.initial_state = state
        balances = [EnergyBalance() for _ in range(cfg.days)]
        day_states = [state]

        if self.trace is not None:
            self.trace.on_run_start(cfg, sim, controller)

        logger.info(f'Starting closed-loop run of `{cfg.controller}` for {cfg.days} days, {self.get_scenario_name()}.')

        volume, cost = 0.0, 0.0
        log_state = None
        pl_int, pu_int = None, None
        for k in tqdm(range(n), disable=not self.progress, mininterval=1.0):
            t = k * sim_dt
            self.time = t

            if k % period_steps == 0:
                sensors = sim.read_sensors(state)
                if N > 0:
                    forecast = forecaster.make_forecast(t, N, controller.period)
                    price_vector = prices.price_vector(t, N, controller.period)
                else:
                    forecast, price_vector = None, None
                command = controller.step(sensors, t, forecast, price_vector)
                if converter is not None and command.mode == 'continuous':
                    command = converter.convert_command(command, spec.p_bar_lower, spec.p_bar_upper)
                pl_int, pu_int = command.get_power_arrays(period_steps)
                if self.trace is not None:
                    self.trace.on_control(t, sensors, command)

            if k % log_steps == 0:
                log_state, log_volume, log_cost = state, volume, cost

            i = k % period_steps
            self.p_lower[k] = pl_int[i]
            self.p_upper[k] = pu_int[i]
            self.t_out[k] = sim.outlet_temp(state)

            state = sim.sim_step(state, self.p_lower[k], self.p_upper[k], flow[k], balance=balances[k // day_steps])

            volume += flow[k] * sim_dt
            cost += (self.p_lower[k] + self.p_upper[k]) * sim_dt / Physics.J_PER_KWH * prices.price_at(t)

            if (k + 1) % log_steps == 0 and self.trace is not None:
                s = slice(k + 1 - log_steps, k + 1)
                self.trace.on_log(log_state.time, log_state, sim.read_sensors(log_state),
                                  float(np.mean(self.p_lower[s])), float(np.mean(self.p_upper[s])),
                                  float(np.mean(flow[s])), log_volume, log_cost)

            if (k + 1) % day_steps == 0:
                day_states.append(state)

        self.final_state = state
        if self.trace is not None:
            self.trace.on_log(state.time, state, sim.read_sensors(state), 0.0, 0.0, 0.0, volume, cost)

        # Run-level energy audit
        total = EnergyBalance()
        for b in balances:
            total.electrical += b.electrical
            total.outlet_enthalpy += b.outlet_enthalpy
            total.ambient_loss += b.ambient_loss
            total.draw_volume += b.draw_volume
        residual = total.relative_residual(day_states[0], day_states[-1], sim.node_volume)

        window = slice(n - day_steps, n)
        collector = MetricsCollector(sim_dt, ambient.t_inlet, prices)
        self.metrics = collector.collect(
            (n - day_steps) * sim_dt,
            self.p_lower[window], self.p_upper[window], flow[window], self.t_out[window],
            balance=balances[-1],
            diagnostics=controller.diagnostics if isinstance(controller, MpcController) else None,
            controller=cfg.controller,
            daily_volume_gal=cfg.get_daily_volume_gal(),
            alpha=cfg.alpha,
            actuation=cfg.actuation,
            energy_balance_residual=residual)

        logger.info(f'Finished run of `{cfg.controller}`: final-day cost ${self.metrics.cost:.3f}, '
                    f'{self.metrics.energy_kwh:.3f} kWh, {self.metrics.fallback_count} solver fallbacks.')

        if self.trace is not None:
            self.trace.on_run_finish(self.metrics)

        return self.metrics

def run_closed_loop(config, trace=None, progress=False):
    trace = trace if trace is not None else TrajectoryLog()
    loop = ClosedLoop(config, trace=trace, progress=progress)
    metrics = loop.run()
    return trace, metrics
