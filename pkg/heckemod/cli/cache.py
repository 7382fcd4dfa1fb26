import json
import logging
import warnings
from pathlib import Path
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = ["PolyCache", "encode_record", "decode_record"]


def encode_record(p, k, poly):
    """
    One cache line: JSON with sorted keys, coefficients ascending as
    decimal strings, LF terminated
    """
    record = {"coeffs": poly.to_json(), "k": int(k), "p": int(p)}
    return json.dumps(record, sort_keys=True) + "\n"


def decode_record(line):
    """
    Parse a cache line

    Returns
    -------
    p, k, poly: int, int, IntPoly

    Raises
    ------
    ValueError
        If the line is not a well formed record
    """
    record = json.loads(line)
    p, k = int(record["p"]), int(record["k"])
    poly = hm.hecke.IntPoly(int(cc) for cc in record["coeffs"])
    if not poly.is_monic or poly.degree != hm.hecke.dim_cusp(k):
        raise ValueError("record for T_{{{0},{1}}} has the wrong shape".format(p, k))
    return p, k, poly


class PolyCache(object):
    """
    Characteristic polynomials T_{p,k}, persisted as one JSON-lines file
    per p

    Parameters
    ----------
    directory: Path or None
               None keeps everything in memory

    Notes
    -----
    Instances are callable as cache(p, k) and can be handed to any
    library function taking a polynomial source. Only the process
    owning the cache writes to it. Records in a file are kept sorted
    by k.
    """

    def __init__(self, directory=None):
        self.directory = None if directory is None else Path(directory)
        self._polys = {}
        self._loaded = set()
        self.hits = 0
        self.misses = 0

    def _path(self, p):
        return self.directory / "T_{0}.jsonl".format(int(p))

    def _load(self, p):
        if p in self._loaded:
            return
        self._loaded.add(p)
        if self.directory is None:
            return
        path = self._path(p)
        if not path.exists():
            return
        with path.open("r", encoding="utf-8", newline="\n") as handle:
            for lineno, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    rp, rk, poly = decode_record(line)
                except (ValueError, KeyError, TypeError) as err:
                    warnings.warn(
                        "Skipping malformed cache line {0}:{1} ({2})".format(
                            path, lineno, err
                        )
                    )
                    continue
                if rp == p:
                    self._polys[(rp, rk)] = poly

    def __contains__(self, key):
        p, k = int(key[0]), int(key[1])
        self._load(p)
        return (p, k) in self._polys

    def get(self, p, k):
        self._load(int(p))
        return self._polys.get((int(p), int(k)))

    def store(self, p, k, poly):
        """
        Record a polynomial

        The file for p is rewritten with its records sorted by k, so its
        bytes depend only on the set of stored weights. Malformed lines
        are dropped by the rewrite.
        """
        p, k = int(p), int(k)
        self._load(p)
        if (p, k) in self._polys:
            return
        self._polys[(p, k)] = poly
        if self.directory is None:
            return
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(p)
        tmp = path.with_name(path.name + ".tmp")
        weights = sorted(kk for (pp, kk) in self._polys if pp == p)
        with tmp.open("w", encoding="utf-8", newline="\n") as handle:
            for kk in weights:
                handle.write(encode_record(p, kk, self._polys[(p, kk)]))
        tmp.replace(path)

    def __call__(self, p, k):
        poly = self.get(p, k)
        if poly is not None:
            self.hits += 1
            logger.debug("cache hit T_{%d,%d}", p, k)
            return poly
        self.misses += 1
        poly = hm.hecke.charpoly(hm.hecke.HeckeSpec(k=int(k), n=int(p)))
        self.store(p, k, poly)
        return poly
