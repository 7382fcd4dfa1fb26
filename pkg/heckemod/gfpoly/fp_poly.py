import numba
import numpy as np
import heckemod as hm
from heckemod.errors import InexactDivision

__all__ = [
    "FpPoly",
    "reduce_mod",
    "poly_gcd",
    "powmod",
    "divide_exact",
]


@numba.jit(nopython=True, cache=True)
def _mul_kernel(a, b, ell):
    out = np.zeros(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    for ii in range(a.shape[0]):
        if a[ii] == 0:
            continue
        for jj in range(b.shape[0]):
            out[ii + jj] = (out[ii + jj] + a[ii] * b[jj]) % ell
    return out


@numba.jit(nopython=True, cache=True)
def _divmod_kernel(a, b, inv_lead, ell):
    rem = a.copy()
    db = b.shape[0] - 1
    dq = a.shape[0] - 1 - db
    quo = np.zeros(dq + 1, dtype=np.int64)
    for ii in range(dq, -1, -1):
        coef = (rem[ii + db] * inv_lead) % ell
        quo[ii] = coef
        if coef != 0:
            for jj in range(db + 1):
                rem[ii + jj] = (rem[ii + jj] - coef * b[jj]) % ell
    return quo, rem[:db]


def _strip(arr):
    nonzero = np.flatnonzero(arr)
    if nonzero.shape[0] == 0:
        return arr[:0]
    return arr[: nonzero[-1] + 1]


class FpPoly(object):
    """
    Dense univariate polynomial over the prime field F_ell

    Parameters
    ----------
    coeffs: sequence of int
            Coefficients in ascending order of degree, reduced on entry
    ell:    int
            Prime modulus

    Notes
    -----
    Residues live in an int64 numpy array without trailing zeros; the
    zero polynomial has no coefficients. Products and long division run
    in numba kernels, which is safe as long as ell^2 fits in int64.
    """

    __slots__ = ("ell", "_coeffs")

    def __init__(self, coeffs, ell):
        ell = int(ell)
        if ell < 2:
            raise ValueError("Modulus must be at least 2")
        self.ell = ell
        arr = np.array([int(cc) % ell for cc in coeffs], dtype=np.int64)
        self._coeffs = _strip(arr)
        self._coeffs.flags.writeable = False

    @classmethod
    def _wrap(cls, arr, ell):
        obj = cls.__new__(cls)
        obj.ell = ell
        obj._coeffs = _strip(np.ascontiguousarray(arr, dtype=np.int64))
        obj._coeffs.flags.writeable = False
        return obj

    @classmethod
    def x(cls, ell):
        return cls([0, 1], ell)

    @classmethod
    def constant(cls, value, ell):
        return cls([value], ell)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial"""
        return self._coeffs.shape[0] - 1

    def is_zero(self):
        return self._coeffs.shape[0] == 0

    def is_one(self):
        return self._coeffs.shape[0] == 1 and self._coeffs[0] == 1

    @property
    def lc(self):
        return int(self._coeffs[-1]) if self._coeffs.shape[0] else 0

    def key(self):
        """Canonical sort key: degree, then coefficients"""
        return (self.degree, tuple(int(cc) for cc in self._coeffs))

    def monic(self):
        if self.is_zero():
            raise ZeroDivisionError("The zero polynomial has no monic form")
        inv = pow(self.lc, -1, self.ell)
        return FpPoly._wrap((self._coeffs * inv) % self.ell, self.ell)

    def _check(self, other):
        if not isinstance(other, FpPoly):
            other = FpPoly([int(other)], self.ell)
        if other.ell != self.ell:
            raise ValueError("Moduli differ: {0} and {1}".format(self.ell, other.ell))
        return other

    def __add__(self, other):
        other = self._check(other)
        size = max(self._coeffs.shape[0], other._coeffs.shape[0])
        out = np.zeros(size, dtype=np.int64)
        out[: self._coeffs.shape[0]] += self._coeffs
        out[: other._coeffs.shape[0]] += other._coeffs
        return FpPoly._wrap(out % self.ell, self.ell)

    def __neg__(self):
        return FpPoly._wrap((-self._coeffs) % self.ell, self.ell)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return FpPoly._wrap(np.zeros(0, dtype=np.int64), self.ell)
        return FpPoly._wrap(_mul_kernel(self._coeffs, other._coeffs, self.ell), self.ell)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        if self.degree < other.degree:
            return FpPoly._wrap(np.zeros(0, dtype=np.int64), self.ell), self
        inv = pow(other.lc, -1, self.ell)
        quo, rem = _divmod_kernel(self._coeffs, other._coeffs, inv, self.ell)
        return FpPoly._wrap(quo, self.ell), FpPoly._wrap(rem, self.ell)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, exponent):
        result = FpPoly([1], self.ell)
        base = self
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("Exponent must be nonnegative")
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def derivative(self):
        if self.degree < 1:
            return FpPoly._wrap(np.zeros(0, dtype=np.int64), self.ell)
        scale = np.arange(1, self._coeffs.shape[0], dtype=np.int64)
        return FpPoly._wrap((self._coeffs[1:] * scale) % self.ell, self.ell)

    def __call__(self, value):
        acc = 0
        for cc in self._coeffs[::-1]:
            acc = (acc * value + int(cc)) % self.ell
        return acc

    def __eq__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.ell == other.ell and np.array_equal(self._coeffs, other._coeffs)

    def __hash__(self):
        return hash((self.ell, self._coeffs.tobytes()))

    def __repr__(self):
        return "FpPoly({0}, ell={1})".format([int(cc) for cc in self._coeffs], self.ell)

    def __str__(self):
        return hm.hecke.format_poly([int(cc) for cc in self._coeffs], times="")

    def to_list(self):
        return [int(cc) for cc in self._coeffs]


def reduce_mod(f, ell):
    """
    Reduce an integer polynomial modulo ell

    Parameters
    ----------
    f:   IntPoly or sequence of int
         Ascending integer coefficients
    ell: int
         Modulus, at least 2

    Returns
    -------
    fbar: FpPoly
          Coefficient-wise reduction into [0, ell)
    """
    coeffs = f.coeffs if hasattr(f, "coeffs") else f
    return FpPoly(coeffs, ell)


def poly_gcd(a, b):
    """Monic greatest common divisor over F_ell (zero if both are zero)"""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def powmod(base, exponent, modulus):
    """
    base**exponent reduced modulo a polynomial, by repeated squaring
    """
    result = FpPoly([1], base.ell) % modulus
    base = base % modulus
    exponent = int(exponent)
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        exponent >>= 1
        if exponent:
            base = (base * base) % modulus
    return result


def divide_exact(a, b):
    """
    Exact quotient a / b over F_ell

    Parameters
    ----------
    a: FpPoly
       Dividend
    b: FpPoly
       Nonzero divisor

    Returns
    -------
    q: FpPoly
       The polynomial with a = q b

    Raises
    ------
    InexactDivision
       If b does not divide a; the remainder is attached
    """
    quo, rem = divmod(a, b)
    if not rem.is_zero():
        raise InexactDivision(rem)
    return quo
