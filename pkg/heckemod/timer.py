import logging
import time

logger = logging.getLogger(__name__)

__all__ = ["tic", "toc"]


def TicTocGenerator():
    """
    Generator that returns time differences
    """
    time_initl = 0
    time_final = time.perf_counter()
    while True:
        time_initl = time_final
        time_final = time.perf_counter()
        yield time_final - time_initl


TicToc = TicTocGenerator()


def toc(label=None, report=True):
    """
    Time elapsed since the last call to tic() or toc()

    Parameters
    ----------
    label:  str
            Name of the timed step, used in the log line
    report: bool
            If False the interval is consumed silently

    Returns
    -------
    elapsed: float
             Seconds since the previous tic/toc
    """
    elapsed = next(TicToc)
    if report:
        logger.info("%s took %.3f seconds", label or "step", elapsed)
    return elapsed


def tic():
    """
    Starts the timer
    """
    toc(report=False)
