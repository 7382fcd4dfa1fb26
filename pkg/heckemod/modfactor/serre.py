import logging
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = [
    "small_ell_rule",
    "congruence_class_invariance",
    "serre_classification_check",
]


def small_ell_rule(p, k, ell):
    """
    Closed form of T_{p,k} mod 2 and mod 3

    Parameters
    ----------
    p:   int
         Prime; odd for ell = 2, distinct from 3 for ell = 3
    k:   int
         Even weight
    ell: int
         2 or 3

    Returns
    -------
    predicted: FpPoly
               x^(d_k) mod 2; mod 3, (x - 2)^(d_k) if p = 1 mod 3 and
               x^(d_k) if p = 2 mod 3
    """
    if ell not in (2, 3):
        raise ValueError("ell must be 2 or 3")
    if p == ell or (ell == 2 and p % 2 == 0):
        raise ValueError("p must be coprime to ell")
    dim = hm.hecke.dim_cusp(k)
    root = 2 if ell == 3 and p % 3 == 1 else 0
    return hm.gfpoly.FpPoly([-root, 1], ell) ** dim


def congruence_class_invariance(p, q, ell, k, source=None):
    """
    Whether T_{p,k} = T_{q,k} mod ell for primes p = q mod ell
    """
    if ell > 7:
        raise ValueError("ell must be at most 7")
    if p % ell == 0 or q % ell == 0:
        raise ValueError("p and q must differ from ell")
    if (p - q) % ell:
        raise ValueError("p and q must be congruent mod ell")
    lhs = hm.modfactor.charpoly_mod(p, k, ell, source)
    rhs = hm.modfactor.charpoly_mod(q, k, ell, source)
    return lhs == rhs


def _serre_values(p, ell):
    powers = [pow(p, ee, ell) for ee in range(ell - 1)]
    return {
        (powers[mm] + powers[nn]) % ell
        for mm in range(ell - 1)
        for nn in range(mm, ell - 1)
    }


def serre_classification_check(ell, p, k, source=None):
    """
    Whether every root of T_{p,k} mod ell has the form p^m + p^n mod ell

    Parameters
    ----------
    ell:    int
            3, 5 or 7
    p:      int
            Prime distinct from ell
    k:      int
            Even weight
    source: callable, optional

    Returns
    -------
    holds: bool
           False as well when T_{p,k} mod ell does not split over F_ell

    Notes
    -----
    0 <= m <= n < ell - 1.
    """
    if ell not in (3, 5, 7):
        raise ValueError("ell must be 3, 5 or 7")
    poly = hm.modfactor.charpoly_mod(p, k, ell, source)
    found = hm.gfpoly.roots(poly)
    if len(found) != poly.degree:
        logger.debug("T_{%d,%d} does not split mod %d", p, k, ell)
        return False
    allowed = _serre_values(p, ell)
    return all(root in allowed for root in found)
