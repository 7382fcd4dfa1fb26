import functools
import logging
import numpy as np
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = ["IntPoly", "berkowitz", "charpoly", "format_poly"]


def format_poly(coeffs, times="*"):
    """Descending human form of ascending coefficients, e.g. x^2 - 1080*x - 20468736"""
    terms = []
    for deg in range(len(coeffs) - 1, -1, -1):
        cc = coeffs[deg]
        if cc == 0:
            continue
        mag = abs(cc)
        if deg == 0:
            body = str(mag)
        else:
            power = "x" if deg == 1 else "x^{0}".format(deg)
            body = power if mag == 1 else "{0}{1}{2}".format(mag, times, power)
        if not terms:
            terms.append(("-" if cc < 0 else "") + body)
        else:
            terms.append(("- " if cc < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


class IntPoly(object):
    """
    Dense univariate polynomial with exact integer coefficients

    Parameters
    ----------
    coeffs: sequence of int
            Coefficients in ascending order of degree; trailing zeros
            are dropped
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        coeffs = [int(cc) for cc in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def is_monic(self):
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __call__(self, x):
        value = 0
        for cc in reversed(self._coeffs):
            value = value * x + cc
        return value

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return "IntPoly({0})".format(list(self._coeffs))

    def __str__(self):
        return format_poly(self._coeffs)

    def to_json(self):
        """Ascending coefficients as decimal strings"""
        return [str(cc) for cc in self._coeffs]


def berkowitz(matrix):
    """
    Characteristic polynomial by the Berkowitz algorithm

    Parameters
    ----------
    matrix: ndarray
            Square matrix with exact (object dtype) integer entries

    Returns
    -------
    poly: IntPoly
          det(x I - matrix), monic of degree equal to the size

    Notes
    -----
    Division free: for each leading principal block [[A, C], [R, a]]
    the characteristic polynomial of the block is the product of the
    lower triangular Toeplitz matrix with first column
    (1, -a, -RC, -RAC, ..., -RA^(i-1)C) and the previous polynomial.
    Only ring operations occur, so integer input stays integral.

    See Also
    --------
    charpoly
    """
    mat = np.asarray(matrix, dtype=object)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("Matrix must be square")
    dim = mat.shape[0]
    poly = [1]
    for kk in range(dim):
        toeplitz = [1, -mat[kk, kk]]
        row = mat[kk, :kk]
        vec = mat[:kk, kk]
        for _ in range(kk):
            toeplitz.append(-row.dot(vec))
            vec = mat[:kk, :kk].dot(vec)
        new_poly = [0] * (kk + 2)
        for jj, pc in enumerate(poly):
            for ii in range(kk + 2 - jj):
                new_poly[ii + jj] += toeplitz[ii] * pc
        poly = new_poly
    return IntPoly(reversed(poly))


@functools.lru_cache(maxsize=512)
def charpoly(spec):
    """
    Characteristic polynomial T_{n,k}(x) of T_n on S_k(1)

    Parameters
    ----------
    spec: HeckeSpec

    Returns
    -------
    poly: IntPoly
          Monic, of degree d_k; the constant 1 on the zero space
    """
    if spec.k % 2:
        raise ValueError("Weight must be even")
    poly = berkowitz(hm.hecke.hecke_matrix(spec))
    logger.debug("T_{%d,%d} has degree %d", spec.n, spec.k, poly.degree)
    return poly
