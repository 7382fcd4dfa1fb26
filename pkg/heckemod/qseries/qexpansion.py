import numpy as np

__all__ = ["QExpansion", "mul", "pow", "one"]


class QExpansion(object):
    """
    Truncated power series in q with exact integer coefficients

    Parameters
    ----------
    coeffs: sequence of int
            Coefficient of q^m at position m, for m = 0 .. prec-1

    Notes
    -----
    Coefficients are held in a read-only numpy array of dtype object so
    every entry stays an arbitrary-precision Python int. The truncation
    order ``prec`` is exclusive and equals the number of coefficients.
    Binary operations never extend precision: the result is known only
    up to the smaller of the two operand precisions.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        arr = np.array([int(cc) for cc in coeffs], dtype=object)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise ValueError("A q-expansion needs at least one coefficient")
        arr.flags.writeable = False
        self._coeffs = arr

    @classmethod
    def _wrap(cls, arr):
        obj = cls.__new__(cls)
        arr = np.asarray(arr, dtype=object)
        arr.flags.writeable = False
        obj._coeffs = arr
        return obj

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def prec(self):
        return self._coeffs.shape[0]

    def __len__(self):
        return self.prec

    def __getitem__(self, index):
        if isinstance(index, slice):
            return [int(cc) for cc in self._coeffs[index]]
        if index < 0 or index >= self.prec:
            raise IndexError(
                "coefficient q^{0} is beyond precision {1}".format(index, self.prec)
            )
        return int(self._coeffs[index])

    def truncate(self, prec):
        if prec < 1:
            raise ValueError("Precision must be positive")
        if prec > self.prec:
            raise ValueError("Truncation cannot extend precision")
        return QExpansion._wrap(self._coeffs[:prec].copy())

    def valuation(self):
        """Index of the first nonzero coefficient, or None for zero"""
        for mm in range(self.prec):
            if self._coeffs[mm] != 0:
                return mm
        return None

    def is_zero(self):
        return self.valuation() is None

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        return QExpansion._wrap(self._coeffs[:prec] + other._coeffs[:prec])

    def __sub__(self, other):
        prec = min(self.prec, other.prec)
        return QExpansion._wrap(self._coeffs[:prec] - other._coeffs[:prec])

    def __neg__(self):
        return QExpansion._wrap(-self._coeffs)

    def __mul__(self, other):
        if isinstance(other, QExpansion):
            return mul(self, other)
        return QExpansion._wrap(self._coeffs * int(other))

    def __rmul__(self, other):
        return QExpansion._wrap(self._coeffs * int(other))

    def __pow__(self, exponent):
        return pow(self, exponent)

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        return self.prec == other.prec and all(
            aa == bb for aa, bb in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash(tuple(self._coeffs))

    def __repr__(self):
        shown = ", ".join(str(cc) for cc in self._coeffs[:8])
        if self.prec > 8:
            shown += ", ..."
        return "QExpansion([{0}], prec={1})".format(shown, self.prec)


def one(prec):
    """The constant series 1 truncated at ``prec``"""
    arr = np.zeros(prec, dtype=object)
    arr[0] = 1
    return QExpansion._wrap(arr)


def mul(a, b):
    """
    Product of two q-expansions

    Parameters
    ----------
    a: QExpansion
    b: QExpansion

    Returns
    -------
    product: QExpansion
             Convolution of the coefficients truncated at
             min(a.prec, b.prec)

    Notes
    -----
    ``np.convolve`` on object arrays multiplies the Python ints
    directly, so no overflow can occur.
    """
    prec = min(a.prec, b.prec)
    product = np.convolve(a.coeffs[:prec], b.coeffs[:prec])[:prec]
    return QExpansion._wrap(product)


def pow(a, exponent):
    """
    Power of a q-expansion by repeated squaring

    Parameters
    ----------
    a:        QExpansion
    exponent: int
              Nonnegative exponent

    Returns
    -------
    power: QExpansion
           a**exponent at the precision of a
    """
    exponent = int(exponent)
    if exponent < 0:
        raise ValueError("Exponent must be nonnegative")
    result = one(a.prec)
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result
