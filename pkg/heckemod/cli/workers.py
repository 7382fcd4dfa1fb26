import logging
from concurrent.futures import ProcessPoolExecutor
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = ["prefetch"]


def _compute(task):
    p, k = task
    poly = hm.hecke.charpoly(hm.hecke.HeckeSpec(k=k, n=p))
    return p, k, poly.to_json()


def prefetch(cache, tasks, jobs=1):
    """
    Fill the cache with T_{p,k} for every (p, k) in tasks

    Parameters
    ----------
    cache: PolyCache
    tasks: iterable of (int, int)
    jobs:  int
           With jobs > 1 the polynomials are computed in a process pool
           and stored by the calling process in sorted task order

    Returns
    -------
    computed: int
              Number of polynomials that were not cached yet
    """
    missing = sorted({(int(p), int(k)) for p, k in tasks if (p, k) not in cache})
    if not missing:
        return 0
    logger.info("computing %d characteristic polynomials on %d jobs", len(missing), jobs)
    if jobs <= 1:
        for p, k in missing:
            cache(p, k)
        return len(missing)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_compute, missing))
    for p, k, coeffs in results:
        cache.store(p, k, hm.hecke.IntPoly(int(cc) for cc in coeffs))
    return len(missing)
