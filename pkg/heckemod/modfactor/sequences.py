import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional
import sympy.ntheory as snt
import heckemod as hm
from heckemod.errors import FalsificationError, InexactDivision

logger = logging.getLogger(__name__)

__all__ = [
    "SEQUENCE_ELLS",
    "charpoly_int",
    "charpoly_mod",
    "lemma1_check",
    "lemma1_sweep",
    "class_weights",
    "default_max_weight",
    "detect_period",
    "RootSequence",
    "root_sequence",
    "QuotientSequence",
    "quotient_sequence",
]

# primes for which every weight step in a class adds at most one dimension
SEQUENCE_ELLS = (5, 7, 13)


def charpoly_int(p, k, source=None):
    """
    Exact T_{p,k}(x), either computed or served by a polynomial source

    Parameters
    ----------
    p:      int
            Hecke index
    k:      int
            Even weight
    source: callable, optional
            source(p, k) -> IntPoly, for instance a persistent cache.
            Defaults to hm.hecke.charpoly.
    """
    if source is None:
        return hm.hecke.charpoly(hm.hecke.HeckeSpec(k=int(k), n=int(p)))
    return source(int(p), int(k))


def _check_prime(value, name):
    if int(value) != value or not snt.isprime(int(value)):
        raise ValueError("{0} must be prime, got {1}".format(name, value))


def _check_weight(k):
    if int(k) != k or k % 2:
        raise ValueError("Weight must be an even integer, got {0}".format(k))


def charpoly_mod(p, k, ell, source=None):
    """
    T_{p,k}(x) reduced modulo ell

    Parameters
    ----------
    p:   int
         Prime Hecke index
    k:   int
         Even weight
    ell: int
         Prime modulus, distinct from p

    Returns
    -------
    fbar: FpPoly
          Monic of degree d_k; the constant 1 when S_k(1) is zero
    """
    _check_prime(p, "p")
    _check_prime(ell, "ell")
    _check_weight(k)
    if p == ell:
        raise ValueError("p and ell must be distinct")
    return hm.gfpoly.reduce_mod(charpoly_int(p, k, source), ell)


def lemma1_check(p, ell, k, source=None):
    """
    Exact quotient of T_{p,k+ell-1} by T_{p,k} modulo ell

    Returns
    -------
    g: FpPoly
       Polynomial of degree d_{k+ell-1} - d_k

    Raises
    ------
    FalsificationError
       claim "lemma1", when T_{p,k} mod ell does not divide
       T_{p,k+ell-1} mod ell
    """
    if ell < 5:
        raise ValueError("Divisibility along weights needs ell >= 5")
    if k < 12:
        raise ValueError("Weight must be at least 12")
    lower = charpoly_mod(p, k, ell, source)
    upper = charpoly_mod(p, k + ell - 1, ell, source)
    try:
        return hm.gfpoly.divide_exact(upper, lower)
    except InexactDivision as err:
        raise FalsificationError(
            "lemma1",
            "T_{{{0},{1}}} does not divide T_{{{0},{2}}} mod {3}".format(
                p, k, k + ell - 1, ell
            ),
            p=p,
            ell=ell,
            k=k,
            remainder=err.remainder.to_list(),
        ) from err


def lemma1_sweep(primes, ells, kmax, source=None):
    """
    Run lemma1_check over every even 12 <= k <= kmax

    Returns
    -------
    checks: int
            Number of divisibility checks performed; the first failure
            raises
    """
    checks = 0
    for ell in ells:
        for p in primes:
            if p == ell:
                continue
            for kk in range(12, int(kmax) + 1, 2):
                lemma1_check(p, ell, kk, source)
                checks += 1
            logger.debug("lemma 1 holds for p=%d, ell=%d up to k=%d", p, ell, kmax)
    logger.info("%d divisibility checks passed", checks)
    return checks


def class_weights(ell, kclass, max_weight):
    """Even weights 12 <= k <= max_weight with k = kclass mod (ell - 1)"""
    step = ell - 1
    start = 12
    while (start - kclass) % step:
        start += 2
    return list(range(start, int(max_weight) + 1, step))


def default_max_weight(ell, kclass, single_period=False):
    """
    Largest weight walked by root_sequence and quotient_sequence

    Notes
    -----
    2 * 12 * (ell - 1) + kclass in general, which gives at least two
    periods for ell in {5, 7}. For ell = 13 the walk goes to 360 + kclass
    (two periods of 14 roots), or 180 + kclass with single_period.
    """
    if ell == 13:
        return (180 if single_period else 360) + kclass
    return 24 * (ell - 1) + kclass


def detect_period(terms, max_period=None):
    """
    Least period of a finite sequence

    Parameters
    ----------
    terms:      sequence
    max_period: int, optional
                Largest period tried; never more than len(terms) // 2

    Returns
    -------
    period: int or None
            Least P with terms[i] == terms[i + P] for every valid i, so
            that at least two full periods are present. None if there is
            no such P.
    """
    terms = list(terms)
    top = len(terms) // 2
    if max_period is not None:
        top = min(top, int(max_period))
    for period in range(1, top + 1):
        if all(terms[ii] == terms[ii + period] for ii in range(len(terms) - period)):
            return period
    return None


def _check_sequence_args(p, ell, kclass, allowed):
    _check_prime(p, "p")
    if ell not in allowed:
        raise ValueError("ell must be one of {0}".format(allowed))
    if p == ell:
        raise ValueError("p and ell must be distinct")
    if kclass % 2 or not 0 <= kclass < ell - 1:
        raise ValueError("kclass must be an even residue mod {0}".format(ell - 1))


@dataclass(frozen=True)
class RootSequence:
    """
    The sequence a_1, a_2, ... of roots of T_{p,k} mod ell along a class

    Parameters
    ----------
    p:             int
    ell:           int
    kclass:        int
                   k mod (ell - 1)
    k0:            int
                   First weight of the walk
    terms:         tuple of int
                   The roots of T_{p,k} mod ell are terms[:d_k] for every
                   walked weight k
    period:        int or None
                   Detected least period; None when detection was skipped
    verified_weight: int
                   Last weight walked
    """

    p: int
    ell: int
    kclass: int
    k0: int
    terms: tuple
    period: Optional[int]
    verified_weight: int

    def one_period(self):
        if self.period is None:
            return self.terms
        return self.terms[: self.period]

    def to_dict(self):
        return {
            "p": self.p,
            "ell": self.ell,
            "kclass": self.kclass,
            "k0": self.k0,
            "terms": list(self.terms),
            "period": self.period,
            "verified_weight": self.verified_weight,
        }


def root_sequence(
    p, ell, kclass, max_weight=None, single_period=False, source=None
):
    """
    Walk the weights of a class and collect the new root at each step

    Parameters
    ----------
    p:             int
                   Prime, distinct from ell
    ell:           int
                   5, 7 or 13
    kclass:        int
                   Even residue of k mod (ell - 1)
    max_weight:    int, optional
                   Last weight walked, default_max_weight by default
    single_period: bool
                   Skip period detection
    source:        callable, optional
                   Polynomial source, see charpoly_int

    Returns
    -------
    sequence: RootSequence

    Raises
    ------
    FalsificationError
       claim "splitting" when some T_{p,k} mod ell does not split into
       linear factors, "lemma1" when the roots at one weight are not
       contained in the roots at the next, "period" when no period with
       two full repetitions is found

    Notes
    -----
    The root attributed to a dimension step is the multiset difference of
    the root multisets at consecutive weights of the class.

    See Also
    --------
    detect_period, hm.modfactor.table_theorem2a
    """
    _check_sequence_args(p, ell, kclass, SEQUENCE_ELLS)
    if max_weight is None:
        max_weight = default_max_weight(ell, kclass, single_period)
    weights = class_weights(ell, kclass, max_weight)
    if not weights:
        raise ValueError("max_weight is below the first weight of the class")
    terms = []
    previous = Counter()
    for kk in weights:
        poly = charpoly_mod(p, kk, ell, source)
        found = hm.gfpoly.roots(poly)
        if len(found) != poly.degree:
            raise FalsificationError(
                "splitting",
                "T_{{{0},{1}}} does not split mod {2}".format(p, kk, ell),
                p=p,
                k=kk,
                ell=ell,
                factorization=str(hm.gfpoly.factor(poly)),
            )
        current = Counter(found)
        if previous - current:
            raise FalsificationError(
                "lemma1",
                "roots of T_{{{0},{1}}} mod {2} lost at the next weight".format(
                    p, kk - ell + 1, ell
                ),
                p=p,
                k=kk,
                ell=ell,
            )
        terms.extend(sorted((current - previous).elements()))
        previous = current
        logger.debug("p=%d ell=%d k=%d roots %s", p, ell, kk, found)
    period = None
    if not single_period:
        period = detect_period(terms, 4 * (ell * ell - 1))
        if period is None:
            raise FalsificationError(
                "period",
                "no period in {0} roots for p={1}, ell={2}, kclass={3}".format(
                    len(terms), p, ell, kclass
                ),
                p=p,
                ell=ell,
                kclass=kclass,
                terms=list(terms),
            )
        logger.info(
            "p=%d ell=%d kclass=%d: period %d over %d roots",
            p,
            ell,
            kclass,
            period,
            len(terms),
        )
    return RootSequence(
        p=p,
        ell=ell,
        kclass=kclass,
        k0=weights[0],
        terms=tuple(terms),
        period=period,
        verified_weight=weights[-1],
    )


@dataclass(frozen=True)
class QuotientSequence:
    """
    The quotients f_j = T_{p,k0+j(ell-1)} / T_{p,k0+(j-1)(ell-1)} mod ell

    Parameters
    ----------
    p:      int
    ell:    int
    kclass: int
    k0:     int
    terms:  tuple of FpPoly
            f_1, f_2, ...
    period: int
    """

    p: int
    ell: int
    kclass: int
    k0: int
    terms: tuple
    period: int

    def max_degree(self):
        return max((ff.degree for ff in self.terms), default=0)

    def to_dict(self):
        return {
            "p": self.p,
            "ell": self.ell,
            "kclass": self.kclass,
            "k0": self.k0,
            "terms": [ff.to_list() for ff in self.terms],
            "period": self.period,
        }


def quotient_sequence(p, ell, kclass, max_weight=None, source=None):
    """
    Successive quotients of T_{p,k} mod ell along a weight class

    Parameters
    ----------
    p:          int
                Prime, distinct from ell
    ell:        int
                Prime, at least 5
    kclass:     int
                Even residue of k mod (ell - 1)
    max_weight: int, optional
    source:     callable, optional

    Returns
    -------
    sequence: QuotientSequence
              Periodic in j; its period counts weight steps, not roots

    Raises
    ------
    FalsificationError
       "lemma1" for an inexact quotient, "period" when no period shows up
    """
    _check_prime(p, "p")
    _check_prime(ell, "ell")
    if ell < 5:
        raise ValueError("ell must be at least 5")
    if p == ell:
        raise ValueError("p and ell must be distinct")
    if kclass % 2 or not 0 <= kclass < ell - 1:
        raise ValueError("kclass must be an even residue mod {0}".format(ell - 1))
    if max_weight is None:
        max_weight = default_max_weight(ell, kclass)
    weights = class_weights(ell, kclass, max_weight)
    terms = tuple(lemma1_check(p, ell, kk, source) for kk in weights[:-1])
    for kk, ff in zip(weights, terms):
        jump = hm.hecke.dim_cusp(kk + ell - 1) - hm.hecke.dim_cusp(kk)
        if ff.degree != jump:
            raise FalsificationError(
                "lemma1",
                "quotient at k={0} has degree {1}, expected {2}".format(
                    kk, ff.degree, jump
                ),
                p=p,
                ell=ell,
                k=kk,
            )
    period = detect_period(terms, 4 * (ell * ell - 1))
    if period is None:
        raise FalsificationError(
            "period",
            "no period in {0} quotients for p={1}, ell={2}".format(len(terms), p, ell),
            p=p,
            ell=ell,
            kclass=kclass,
        )
    return QuotientSequence(
        p=p, ell=ell, kclass=kclass, k0=weights[0], terms=terms, period=period
    )
