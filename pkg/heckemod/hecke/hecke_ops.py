import logging
from dataclasses import dataclass
import numpy as np
import sympy.ntheory as snt
import heckemod as hm
from heckemod.errors import PrecisionError

logger = logging.getLogger(__name__)

__all__ = [
    "HeckeSpec",
    "dim_cusp",
    "monomial_basis",
    "hecke_action",
    "hecke_matrix",
    "hecke_eigenvalue_1dim",
]

# basis expansions are requested at precisions rounded up to this step so
# neighbouring weights reuse the memoized powers of Delta, E4 and E6
_PREC_QUANTUM = 64


@dataclass(frozen=True)
class HeckeSpec:
    """
    A Hecke operator T_n acting on S_k(1)

    Parameters
    ----------
    k: int
       Weight; odd weights give the zero space
    n: int
       Index of the Hecke operator, n >= 1

    Notes
    -----
    Level 1 and the trivial character are fixed throughout heckemod.
    """

    k: int
    n: int

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("Hecke index must be a positive integer")
        if int(self.k) != self.k:
            raise ValueError("Weight must be an integer")

    @property
    def dim(self):
        return dim_cusp(self.k)


def dim_cusp(k):
    """
    Dimension of the space of level 1 cusp forms of weight k

    Parameters
    ----------
    k: int
       Weight

    Returns
    -------
    d_k: int
         Number of triples (a, b, c) with a >= 1, b >= 0, c in {0, 1}
         and 12a + 4b + 6c = k; zero for odd or negative k
    """
    k = int(k)
    if k < 12 or k % 2:
        return 0
    count = 0
    for aa in range(1, k // 12 + 1):
        for cc in (0, 1):
            rest = k - 12 * aa - 6 * cc
            if rest >= 0 and rest % 4 == 0:
                count += 1
    return count


def monomial_basis(k):
    """
    Triangular monomial basis of S_k(1)

    Parameters
    ----------
    k: int
       Even weight

    Returns
    -------
    basis: list of tuple
           Exponent triples (a, b, c) for j = 1 .. d_k with a = j, so the
           j-th monomial Delta^a E4^b E6^c starts with q^j

    Notes
    -----
    Ordering by the exponent of Delta makes the basis unit upper
    triangular against the coefficients of q^1 .. q^d, and the Hecke
    matrix can be read off by back-substitution without fractions.
    """
    k = int(k)
    if k % 2:
        raise ValueError("Weight must be even")
    if k < 0:
        raise ValueError("Weight must be nonnegative")
    basis = []
    for jj in range(1, dim_cusp(k) + 1):
        cc = 0 if (k - 12 * jj) % 4 == 0 else 1
        bb = (k - 12 * jj - 6 * cc) // 4
        basis.append((jj, bb, cc))
    return basis


def hecke_action(f, spec, prec):
    """
    Apply T_n to a q-expansion of weight k

    Parameters
    ----------
    f:    QExpansion
          Input series, known to precision f.prec
    spec: HeckeSpec
          Weight and index of the operator
    prec: int
          Requested output precision

    Returns
    -------
    g: QExpansion
       Coefficients of T_n f for q^0 .. q^(prec-1)

    Notes
    -----
    The coefficient of q^m in T_n f is
    sum over e | gcd(m, n) of e^(k-1) a(mn/e^2), so the input must be
    known up to index n (prec - 1).
    """
    n, k = spec.n, spec.k
    needed = n * (prec - 1) + 1
    if f.prec < needed:
        raise PrecisionError(
            "T_{0} to precision {1} needs {2} input coefficients, got {3}".format(
                n, prec, needed, f.prec
            )
        )
    divisors_n = [int(ee) for ee in snt.divisors(n)]
    coeffs = np.empty(prec, dtype=object)
    for mm in range(prec):
        total = 0
        for ee in divisors_n:
            if mm % ee == 0:
                total += ee ** (k - 1) * f.coeffs[mm * n // (ee * ee)]
        coeffs[mm] = total
    return hm.qseries.QExpansion._wrap(coeffs)


def _basis_expansions(k, prec):
    prec = -(-prec // _PREC_QUANTUM) * _PREC_QUANTUM
    return [hm.qseries.monomial(aa, bb, cc, prec) for aa, bb, cc in monomial_basis(k)]


def hecke_matrix(spec):
    """
    Integer matrix of T_n on S_k(1) in the monomial basis

    Parameters
    ----------
    spec: HeckeSpec

    Returns
    -------
    matrix: ndarray
            d x d array of dtype object; column j holds the coordinates
            of T_n applied to the j-th basis form

    Notes
    -----
    Each basis form is expanded to n d + 1 coefficients, enough for the
    first d coefficients of its image. Coordinates come from
    back-substitution against the unit triangular leading block.
    """
    if spec.k % 2:
        raise ValueError("Weight must be even")
    dim = spec.dim
    matrix = np.zeros((dim, dim), dtype=object)
    if dim == 0:
        return matrix
    basis = _basis_expansions(spec.k, spec.n * dim + 1)
    for jj, form in enumerate(basis):
        image = hecke_action(form, spec, dim + 1)
        coords = [0] * dim
        for ii in range(dim):
            value = image.coeffs[ii + 1]
            for rr in range(ii):
                value -= coords[rr] * basis[rr].coeffs[ii + 1]
            coords[ii] = value
        matrix[:, jj] = coords
    logger.debug("T_%d on S_%d: %dx%d matrix", spec.n, spec.k, dim, dim)
    return matrix


def hecke_eigenvalue_1dim(spec):
    """Eigenvalue of T_n on a one-dimensional S_k(1)"""
    if spec.dim != 1:
        raise ValueError("S_{0}(1) is not one-dimensional".format(spec.k))
    return int(hecke_matrix(spec)[0, 0])
