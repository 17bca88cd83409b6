from ..units import Physics
from .setup_logger import logger
from .onenoderegression import OneNodeRegression
from .threenoderegression import ThreeNodeRegression
from .olssolver import OlsSolver

def identify(dataset, model='one-node', dt_bar=300.0, state='sensor7', V_total=Physics.gal_to_m3(50.0), resample=True):
    """
    Resample a log to `dt_bar`, build the regression of the requested model
    and solve it. Returns a ParamIdResults with the plausibility report.
    """

    if model == 'one-node':
        builder = OneNodeRegression(state)
    elif model == 'three-node':
        builder = ThreeNodeRegression(V_total)
    else:
        raise NotImplementedError(f'Control model `{model}` is not supported.')

    data = dataset.resample(dt_bar) if resample else dataset
    system = builder.build(data, dt_bar)
    results = OlsSolver().solve(system)
    results.model = builder
    results.check_plausibility(V_total)

    logger.info(f'Identified {model} parameters from {system.pair_count} sample pairs: '
                + ', '.join(f'{l}={v:.4g}' for l, v in zip(results.labels, results.theta)))
    return results
