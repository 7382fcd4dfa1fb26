import logging
from collections import Counter
from dataclasses import dataclass
import numpy as np
import sympy.ntheory as snt
import heckemod as hm

logger = logging.getLogger(__name__)

__all__ = [
    "DEFAULT_SEED",
    "FactorMultiset",
    "factor",
    "factor_int_poly",
    "roots",
    "is_irreducible",
    "is_squarefree",
    "from_roots",
]

DEFAULT_SEED = 0


@dataclass(frozen=True)
class FactorMultiset:
    """
    Complete factorization of a polynomial over F_ell

    Parameters
    ----------
    ell:     int
             Prime modulus
    unit:    int
             Leading coefficient of the factored polynomial
    factors: tuple
             Pairs (monic irreducible FpPoly, multiplicity), pairwise
             distinct and sorted by degree, then coefficients
    """

    ell: int
    unit: int
    factors: tuple

    def expand(self):
        """Multiply the factorization back out"""
        result = hm.gfpoly.FpPoly.constant(self.unit, self.ell)
        for poly, mult in self.factors:
            result = result * poly ** mult
        return result

    @property
    def degree(self):
        return sum(poly.degree * mult for poly, mult in self.factors)

    @property
    def is_squarefree(self):
        return all(mult == 1 for _, mult in self.factors)

    @property
    def is_irreducible(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def partition(self):
        """Factor degrees, repeated by multiplicity, largest first"""
        parts = []
        for poly, mult in self.factors:
            parts.extend([poly.degree] * mult)
        return tuple(sorted(parts, reverse=True))

    def roots(self):
        """Roots in F_ell with multiplicity, ascending"""
        found = []
        for poly, mult in self.factors:
            if poly.degree == 1:
                found.extend([(-int(poly.coeffs[0])) % self.ell] * mult)
        return sorted(found)

    def to_dict(self):
        return {
            "ell": self.ell,
            "unit": self.unit,
            "factors": [
                {"coeffs": poly.to_list(), "multiplicity": mult}
                for poly, mult in self.factors
            ],
        }

    def __str__(self):
        if not self.factors:
            return str(self.unit)
        text = "" if self.unit == 1 else str(self.unit)
        for poly, mult in self.factors:
            text += "({0})".format(poly)
            if mult > 1:
                text += "^{0}".format(mult)
        return text


def _sqf_list(f):
    # square-free decomposition of a monic f, with ell-th roots taken
    # whenever f is a polynomial in x^ell
    ell = f.ell
    scale, factors = 1, []
    while True:
        done = False
        deriv = f.derivative()
        if not deriv.is_zero():
            g = hm.gfpoly.poly_gcd(f, deriv)
            h = f // g
            ii = 1
            while not h.is_one():
                common = hm.gfpoly.poly_gcd(g, h)
                part = h // common
                if part.degree > 0:
                    factors.append((part, ii * scale))
                g, h, ii = g // common, common, ii + 1
            if g.is_one():
                done = True
            else:
                f = g
        if done:
            return factors
        f = hm.gfpoly.FpPoly._wrap(f.coeffs[::ell], ell)
        scale *= ell


def _ddf(f):
    # distinct-degree factorization of a monic square-free f
    ell = f.ell
    xx = hm.gfpoly.FpPoly.x(ell)
    blocks = []
    ii = 1
    frob = xx % f
    while 2 * ii <= f.degree:
        frob = hm.gfpoly.powmod(frob, ell, f)
        g = hm.gfpoly.poly_gcd(f, frob - xx)
        if not g.is_one():
            blocks.append((g, ii))
            f = f // g
            frob = frob % f
        ii += 1
    if f.degree > 0:
        blocks.append((f, f.degree))
    return blocks


def _edf(f, degree, rng):
    # equal-degree splitting; ell = 2 uses the trace map instead of the
    # quadratic character
    if f.degree == degree:
        return [f]
    ell = f.ell
    while True:
        r = hm.gfpoly.FpPoly(rng.integers(0, ell, size=f.degree), ell)
        if r.degree < 1:
            continue
        if ell == 2:
            h = r
            acc = r
            for _ in range(degree - 1):
                acc = (acc * acc) % f
                h = h + acc
        else:
            h = hm.gfpoly.powmod(r, (ell ** degree - 1) // 2, f) - 1
        g = hm.gfpoly.poly_gcd(f, h)
        if 0 < g.degree < f.degree:
            return _edf(g, degree, rng) + _edf(f // g, degree, rng)


def factor(f, seed=DEFAULT_SEED):
    """
    Factor a polynomial over F_ell into monic irreducibles

    Parameters
    ----------
    f:    FpPoly
          Nonzero polynomial
    seed: int
          Seed of the generator driving equal-degree splitting

    Returns
    -------
    factorization: FactorMultiset
                   unit times the product of factor**multiplicity is f

    Notes
    -----
    Square-free decomposition, then distinct-degree factorization, then
    Cantor-Zassenhaus equal-degree splitting. The factors are sorted
    canonically, so the result does not depend on the seed.

    See Also
    --------
    roots, is_irreducible
    """
    if f.is_zero():
        raise ValueError("Cannot factor the zero polynomial")
    unit = f.lc
    monic = f.monic()
    if monic.degree == 0:
        return FactorMultiset(f.ell, unit, ())
    rng = np.random.default_rng(int(seed) & 0xFFFFFFFFFFFFFFFF)
    collected = {}
    for part, mult in _sqf_list(monic):
        for block, degree in _ddf(part):
            for irred in _edf(block, degree, rng):
                collected[irred] = collected.get(irred, 0) + mult
    ordered = tuple(sorted(collected.items(), key=lambda item: item[0].key()))
    return FactorMultiset(f.ell, unit, ordered)


def factor_int_poly(f, ell, seed=DEFAULT_SEED):
    """Reduce an integer polynomial modulo ell and factor it"""
    return factor(hm.gfpoly.reduce_mod(f, ell), seed=seed)


def roots(f):
    """
    Roots of a polynomial in F_ell, with multiplicity

    Parameters
    ----------
    f: FpPoly
       Nonzero polynomial

    Returns
    -------
    found: list of int
           Ascending residues; as many as deg f exactly when f splits
    """
    return factor(f).roots()


def is_squarefree(f):
    if f.is_zero():
        return False
    return hm.gfpoly.poly_gcd(f, f.derivative()).is_one()


def is_irreducible(f):
    """
    Rabin irreducibility test over F_ell

    Notes
    -----
    f of degree d is irreducible iff x^(ell^d) = x mod f and
    gcd(x^(ell^(d/r)) - x, f) = 1 for every prime r dividing d.
    """
    if f.degree < 1:
        return False
    if f.degree == 1:
        return True
    ell = f.ell
    f = f.monic()
    xx = hm.gfpoly.FpPoly.x(ell)
    if hm.gfpoly.powmod(xx, ell ** f.degree, f) != xx % f:
        return False
    for rr in snt.primefactors(f.degree):
        probe = hm.gfpoly.powmod(xx, ell ** (f.degree // rr), f) - xx
        if not hm.gfpoly.poly_gcd(probe, f).is_one():
            return False
    return True


def from_roots(residues, ell):
    """FactorMultiset of the product of (x - a) over the given roots"""
    counts = Counter(int(rr) % ell for rr in residues)
    factors = tuple(
        (hm.gfpoly.FpPoly([-root, 1], ell), mult)
        for root, mult in counts.items()
    )
    return FactorMultiset(ell, 1, tuple(sorted(factors, key=lambda item: item[0].key())))
