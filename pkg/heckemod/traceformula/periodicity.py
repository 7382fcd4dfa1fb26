import logging
import sympy.ntheory as snt
import heckemod as hm
from heckemod.errors import FalsificationError

logger = logging.getLogger(__name__)

__all__ = [
    "period_bound",
    "a_j_period_bound",
    "trace_mod_periodicity",
]


def _check_ell(ell):
    if ell < 5 or not snt.isprime(ell):
        raise ValueError("ell must be a prime >= 5")


def period_bound(n, ell):
    """
    Upper bound for the period in k of trace(n, k) mod ell

    Parameters
    ----------
    n: int
       Hecke index, coprime to ell
    ell: int
         Prime, at least 5

    Returns
    -------
    bound: int
           ell^2 - 1 when n is a quadratic non-residue mod ell. Otherwise
           ell^(K+1) (ell^2 - 1), with K the largest ell-adic valuation of
           a nonzero discriminant t^2 - 4n, t^2 <= 4n.

    Notes
    -----
    For a non-residue n every discriminant t^2 - 4n is a unit mod ell, and
    the roots of X^2 - tX + n live in the multiplicative group of
    F_{ell^2}, whose order is ell^2 - 1. Degenerate discriminants need the
    lifted period, and the confluent t^2 = 4n term is periodic with period
    ell in k.
    """
    n, ell = int(n), int(ell)
    _check_ell(ell)
    if n % ell == 0:
        raise ValueError("n must be coprime to ell")
    base = ell * ell - 1
    if snt.legendre_symbol(n % ell, ell) == -1:
        return base
    top = 0
    tt = 0
    while tt * tt <= 4 * n:
        disc = 4 * n - tt * tt
        if disc:
            top = max(top, snt.multiplicity(ell, disc))
        tt += 1
    return ell ** (top + 1) * base


def a_j_period_bound(ell):
    """
    (ell^2 - 1) / 12, the bound on the period of the root sequence a_j for
    a non-residue p
    """
    ell = int(ell)
    _check_ell(ell)
    return (ell * ell - 1) // 12


def _first_weight(kclass, ell):
    kk = 4
    while (kk - kclass) % (ell - 1):
        kk += 2
    return kk


def trace_mod_periodicity(n, ell, kclass):
    """
    Least period in k of trace(n, k) mod ell along a weight class

    Parameters
    ----------
    n: int
       Positive Hecke index, not divisible by ell
    ell: int
         Prime, at least 5
    kclass: int
            Even residue of k mod (ell - 1)

    Returns
    -------
    period: int
            Least multiple L of ell - 1 with trace(n, k) = trace(n, k + L)
            mod ell for every sampled pair in the window

    Raises
    ------
    FalsificationError
       If no period is found up to period_bound(n, ell)

    Notes
    -----
    Weights run from the smallest k >= 4 in the class to that weight plus
    twice the bound, so every candidate is compared on at least
    bound / (ell - 1) pairs. Values are computed with trace_mod.

    See Also
    --------
    period_bound, hm.traceformula.trace_mod
    """
    n, ell, kclass = int(n), int(ell), int(kclass)
    _check_ell(ell)
    if n < 1 or n % ell == 0:
        raise ValueError("n must be positive and coprime to ell")
    if kclass % 2 or not 0 <= kclass < ell - 1:
        raise ValueError("kclass must be an even residue mod ell - 1")
    step = ell - 1
    bound = period_bound(n, ell)
    k0 = _first_weight(kclass, ell)
    values = [
        hm.traceformula.trace_mod(n, kk, ell)
        for kk in range(k0, k0 + 2 * bound + 1, step)
    ]
    for shift in range(1, bound // step + 1):
        if all(values[ii] == values[ii + shift] for ii in range(len(values) - shift)):
            logger.info(
                "trace(%d, k) mod %d has period %d on k = %d mod %d",
                n,
                ell,
                shift * step,
                kclass,
                step,
            )
            return shift * step
    raise FalsificationError(
        "period",
        "no period of trace({0}, k) mod {1} up to {2}".format(n, ell, bound),
        n=n,
        ell=ell,
        kclass=kclass,
        bound=bound,
    )
