import functools
import logging
import numpy as np
import sympy.ntheory as snt
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = ["sigma", "eisenstein4", "eisenstein6", "delta", "monomial"]


def sigma(n, r):
    """Divisor power sum sigma_r(n) as a Python int"""
    return int(snt.divisor_sigma(n, r))


def _check_prec(prec):
    if int(prec) != prec or prec < 1:
        raise ValueError("Precision must be a positive integer")
    return int(prec)


def _eisenstein(prec, scale, power):
    prec = _check_prec(prec)
    coeffs = np.empty(prec, dtype=object)
    coeffs[0] = 1
    for nn in range(1, prec):
        coeffs[nn] = scale * sigma(nn, power)
    return hm.qseries.QExpansion._wrap(coeffs)


@functools.lru_cache(maxsize=64)
def eisenstein4(prec):
    """
    Normalized Eisenstein series of weight 4

    Parameters
    ----------
    prec: int
          Truncation order (exclusive)

    Returns
    -------
    E4: QExpansion
        1 + 240 * sum sigma_3(n) q^n
    """
    return _eisenstein(prec, 240, 3)


@functools.lru_cache(maxsize=64)
def eisenstein6(prec):
    """
    Normalized Eisenstein series of weight 6

    Parameters
    ----------
    prec: int
          Truncation order (exclusive)

    Returns
    -------
    E6: QExpansion
        1 - 504 * sum sigma_5(n) q^n
    """
    return _eisenstein(prec, -504, 5)


def _euler_product(prec):
    # prod_{n>=1} (1 - q^n) from the pentagonal number theorem
    coeffs = np.zeros(prec, dtype=object)
    mm = 0
    while True:
        placed = False
        for gen in (mm * (3 * mm - 1) // 2, mm * (3 * mm + 1) // 2):
            if gen < prec:
                coeffs[gen] = -1 if mm % 2 else 1
                placed = True
        if not placed:
            break
        mm += 1
    return hm.qseries.QExpansion._wrap(coeffs)


@functools.lru_cache(maxsize=64)
def delta(prec):
    """
    The discriminant cusp form of weight 12

    Parameters
    ----------
    prec: int
          Truncation order (exclusive)

    Returns
    -------
    Delta: QExpansion
           q * prod (1 - q^n)^24, coefficients tau(n)

    Notes
    -----
    Built from the eta product rather than from (E4^3 - E6^2)/1728,
    which keeps the Eisenstein identity available as an independent
    check and avoids any division.
    """
    prec = _check_prec(prec)
    coeffs = np.zeros(prec, dtype=object)
    if prec > 1:
        eta24 = hm.qseries.pow(_euler_product(prec - 1), 24)
        coeffs[1:] = eta24.coeffs
    return hm.qseries.QExpansion._wrap(coeffs)


@functools.lru_cache(maxsize=256)
def _cached_power(name, exponent, prec):
    if exponent == 0:
        return hm.qseries.one(prec)
    if exponent == 1:
        return {"delta": delta, "e4": eisenstein4, "e6": eisenstein6}[name](prec)
    half = _cached_power(name, exponent // 2, prec)
    result = hm.qseries.mul(half, half)
    if exponent % 2:
        result = hm.qseries.mul(result, _cached_power(name, 1, prec))
    return result


@functools.lru_cache(maxsize=256)
def _eisenstein_part(b, c, prec):
    return hm.qseries.mul(_cached_power("e4", b, prec), _cached_power("e6", c, prec))


@functools.lru_cache(maxsize=256)
def monomial(a, b, c, prec):
    """
    The monomial Delta^a E4^b E6^c

    Parameters
    ----------
    a:    int
          Exponent of Delta
    b:    int
          Exponent of E4
    c:    int
          Exponent of E6
    prec: int
          Truncation order (exclusive)

    Returns
    -------
    form: QExpansion
          A modular form of weight 12a + 4b + 6c; when a >= 1 its
          expansion starts with q^a

    Notes
    -----
    Powers and Eisenstein products are memoized per precision, so the
    monomials of neighbouring weights share most of their work.
    """
    prec = _check_prec(prec)
    if min(a, b, c) < 0:
        raise ValueError("Exponents must be nonnegative")
    logger.debug("monomial Delta^%d E4^%d E6^%d at prec %d", a, b, c, prec)
    return hm.qseries.mul(_cached_power("delta", a, prec), _eisenstein_part(b, c, prec))
