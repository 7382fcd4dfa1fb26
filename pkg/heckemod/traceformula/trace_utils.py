import dataclasses
import functools
import logging
from fractions import Fraction
import sympy.ntheory as snt
from heckemod.errors import FalsificationError

logger = logging.getLogger(__name__)

__all__ = [
    "TraceTerm",
    "hurwitz_class_number",
    "weight_poly",
    "trace_terms",
    "trace",
    "trace_mod",
]


@dataclasses.dataclass(frozen=True)
class TraceTerm:
    """
    The two sums of the level-1 trace formula for T_n on S_k(1)

    Attributes
    ----------
    n: int
    k: int
    elliptic: Fraction
              sum over t^2 <= 4n of U_{k-1}(t, n) H(4n - t^2)
    hyperbolic: int
                sum over dd' = n of min(d, d')^(k-1)
    """

    n: int
    k: int
    elliptic: Fraction
    hyperbolic: int

    @property
    def total(self):
        return -self.elliptic / 2 - Fraction(self.hyperbolic, 2)


@functools.lru_cache(maxsize=None)
def hurwitz_class_number(Nval):
    """
    Hurwitz class number H(N)

    Parameters
    ----------
    Nval: int
          Nonnegative integer

    Returns
    -------
    H: Fraction
       -1/12 for N = 0; zero unless N = 0, 3 mod 4; otherwise the count
       of reduced positive definite forms of discriminant -N, where forms
       proportional to x^2 + y^2 count 1/2 and forms proportional to
       x^2 + xy + y^2 count 1/3

    Notes
    -----
    A form (a, b, c) is reduced when |b| <= a <= c, with b >= 0 whenever
    |b| = a or a = c. Non-primitive forms are included.
    """
    Nval = int(Nval)
    if Nval < 0:
        raise ValueError("H(N) needs N >= 0")
    if Nval == 0:
        return Fraction(-1, 12)
    if Nval % 4 not in (0, 3):
        return Fraction(0)
    total = Fraction(0)
    aa = 1
    while 3 * aa * aa <= Nval:
        for bb in range(-aa, aa + 1):
            if (bb * bb + Nval) % (4 * aa):
                continue
            cc = (bb * bb + Nval) // (4 * aa)
            if cc < aa:
                continue
            if bb < 0 and (-bb == aa or aa == cc):
                continue
            if bb == 0 and aa == cc:
                total += Fraction(1, 2)
            elif bb == aa and aa == cc:
                total += Fraction(1, 3)
            else:
                total += 1
        aa += 1
    return total


def weight_poly(k, t, n):
    """
    Elliptic weight U_{k-1}(t, n) of the trace formula

    Parameters
    ----------
    k: int
       Weight, at least 2
    t: int
       Trace of the elliptic element
    n: int
       Norm, positive

    Returns
    -------
    U: int
       (rho^(k-1) - rhobar^(k-1)) / (rho - rhobar) for the roots rho,
       rhobar of X^2 - tX + n, computed from U_0 = 0, U_1 = 1,
       U_j = t U_(j-1) - n U_(j-2); the case t^2 = 4n comes out as
       (k-1) (t/2)^(k-2) without special handling
    """
    if k < 2:
        raise ValueError("Weight must be at least 2")
    prev, cur = 0, 1
    for _ in range(k - 2):
        prev, cur = cur, t * cur - n * prev
    return cur


def _weight_poly_mod(k, t, n, ell):
    prev, cur = 0, 1
    for _ in range(k - 2):
        prev, cur = cur, (t * cur - n * prev) % ell
    return cur


def _elliptic_terms(n):
    tt = 0
    while tt * tt <= 4 * n:
        yield tt
        tt += 1


def _divisor_pairs(n):
    for dd in snt.divisors(n):
        dd = int(dd)
        yield min(dd, n // dd)


def _check_args(n, k):
    if n < 1:
        raise ValueError("Hecke index must be positive")
    if k < 4 or k % 2:
        raise ValueError("Weight must be even and at least 4")


def trace_terms(n, k):
    """
    Elliptic and hyperbolic sums of the trace formula, kept separate

    See Also
    --------
    trace
    """
    n, k = int(n), int(k)
    _check_args(n, k)
    elliptic = Fraction(0)
    for tt in _elliptic_terms(n):
        term = weight_poly(k, tt, n) * hurwitz_class_number(4 * n - tt * tt)
        # t and -t contribute equally for even k
        elliptic += term if tt == 0 else 2 * term
    hyperbolic = sum(mm ** (k - 1) for mm in _divisor_pairs(n))
    return TraceTerm(n=n, k=k, elliptic=elliptic, hyperbolic=hyperbolic)


def trace(n, k):
    """
    Trace of T_n on S_k(1) from the Eichler-Selberg trace formula

    Parameters
    ----------
    n: int
       Positive Hecke index
    k: int
       Even weight, at least 4

    Returns
    -------
    tr: int
        -1/2 sum_{t^2 <= 4n} U_{k-1}(t, n) H(4n - t^2)
        - 1/2 sum_{dd' = n} min(d, d')^(k-1)

    Raises
    ------
    FalsificationError
       If the rational total is not an integer

    Notes
    -----
    H(0) = -1/12 absorbs the boundary contribution of square n, so one
    elliptic sum covers every n at level 1.

    See Also
    --------
    hurwitz_class_number, weight_poly, trace_terms
    """
    terms = trace_terms(n, k)
    total = terms.total
    if total.denominator != 1:
        raise FalsificationError(
            "trace-integrality",
            "trace of T_{0} on S_{1} is {2}".format(terms.n, terms.k, total),
            n=terms.n,
            k=terms.k,
        )
    return int(total)


def trace_mod(n, k, ell):
    """
    The trace of T_n on S_k(1) reduced modulo a prime ell >= 5

    Notes
    -----
    Same formula as trace, evaluated in Z/ell: the class numbers have
    denominators dividing 12, which are units for ell >= 5.
    """
    n, k, ell = int(n), int(k), int(ell)
    if ell < 5:
        raise ValueError("Reduction needs ell >= 5")
    _check_args(n, k)
    total = 0
    for tt in _elliptic_terms(n):
        hval = hurwitz_class_number(4 * n - tt * tt)
        hmod = hval.numerator * pow(hval.denominator, -1, ell)
        term = _weight_poly_mod(k, tt, n, ell) * hmod
        total += term if tt == 0 else 2 * term
    total += sum(pow(mm, k - 1, ell) for mm in _divisor_pairs(n))
    return (-total * pow(2, -1, ell)) % ell
