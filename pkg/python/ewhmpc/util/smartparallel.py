import multiprocessing
import traceback

from ..setup_logger import logger

class _Call():
    def __init__(self, worker, error_handler):
        self.worker = worker
        self.error_handler = error_handler

    def __call__(self, item):
        try:
            return self.worker(item)
        except Exception as ex:
            if self.error_handler is None:
                raise
            logger.debug(traceback.format_exc())
            return self.error_handler(item, ex)

class SmartParallel():
    """
    Context manager that maps a worker over items in a process pool, or in the
    current process when parallel execution is disabled. Results are yielded
    in completion order, callers sort them when order matters.

    Keeps the interface of `pfs.ga.pfsspec.core.util.SmartParallel`, reduced to
    the process pool and the per-item error handler the sweep needs.
    """

    def __init__(self, verbose=False, parallel=True, threads=None):
        self.verbose = verbose
        self.parallel = parallel
        self.threads = threads if threads is not None else multiprocessing.cpu_count()
        self.pool = None

    def __enter__(self):
        if self.parallel and self.threads > 1:
            if self.verbose:
                logger.info(f'Starting process pool with {self.threads} workers.')
            self.pool = multiprocessing.Pool(self.threads)
        return self

    def __exit__(self, exc_type, exc_value, tb):
        if self.pool is not None:
            self.pool.close()
            self.pool.join()
            self.pool = None
        return False

    def map(self, worker, error_handler, items):
        call = _Call(worker, error_handler)
        if self.pool is not None:
            yield from self.pool.imap_unordered(call, items)
        else:
            for item in items:
                yield call(item)
