import itertools
import numpy as np
import pytest
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_irreducible_p
import heckemod as hm
from heckemod.errors import InexactDivision

FpPoly = hm.gfpoly.FpPoly


def _random_poly(rng, ell, degree):
    coeffs = rng.integers(0, ell, size=degree + 1).tolist()
    coeffs[-1] = int(rng.integers(1, ell))
    return FpPoly(coeffs, ell)


def test_construction_reduces_and_strips():
    poly = FpPoly([-1, 6, 5, 0, 0], 5)
    assert poly.to_list() == [4, 1]
    assert poly.degree == 1
    assert FpPoly([0, 0], 7).is_zero()
    assert FpPoly([], 7).degree == -1
    assert str(FpPoly([4, 0, 1], 5)) == "x^2 + 4"


def test_arithmetic():
    aa = FpPoly([1, 1], 5)
    bb = FpPoly([4, 1], 5)
    assert aa * bb == FpPoly([4, 0, 1], 5)
    assert aa + bb == FpPoly([0, 2], 5)
    assert aa - aa == FpPoly([], 5)
    assert aa ** 5 == FpPoly([1, 0, 0, 0, 0, 1], 5)
    assert (aa * bb)(1) == 0
    assert FpPoly([1, 2, 3], 7).derivative() == FpPoly([2, 6], 7)
    assert FpPoly([2, 4], 7).monic() == FpPoly([4, 1], 7)
    with pytest.raises(ValueError):
        aa + FpPoly([1], 7)


def test_divmod_identity():
    rng = np.random.default_rng(3)
    for ell in (2, 3, 5, 13):
        for _ in range(20):
            aa = _random_poly(rng, ell, int(rng.integers(0, 9)))
            bb = _random_poly(rng, ell, int(rng.integers(0, 5)))
            quo, rem = divmod(aa, bb)
            assert quo * bb + rem == aa
            assert rem.degree < bb.degree
    with pytest.raises(ZeroDivisionError):
        divmod(FpPoly([1, 1], 5), FpPoly([], 5))


def test_gcd_and_powmod():
    ell = 7
    aa = FpPoly([1, 1], ell) * FpPoly([2, 0, 1], ell)
    bb = FpPoly([1, 1], ell) * FpPoly([3, 1], ell)
    assert hm.gfpoly.poly_gcd(aa, bb) == FpPoly([1, 1], ell)
    modulus = FpPoly([1, 0, 1], ell)
    xx = FpPoly.x(ell)
    assert hm.gfpoly.powmod(xx, 4, modulus) == FpPoly([1], ell)
    assert hm.gfpoly.powmod(xx, 49, modulus) == (xx ** 49) % modulus


def test_divide_exact():
    ell = 5
    aa = FpPoly([4, 0, 1], ell)
    assert hm.gfpoly.divide_exact(aa, FpPoly([1, 1], ell)) == FpPoly([4, 1], ell)
    with pytest.raises(InexactDivision) as info:
        hm.gfpoly.divide_exact(aa, FpPoly([2, 1], ell))
    assert not info.value.remainder.is_zero()


def test_reduce_mod():
    poly = hm.hecke.IntPoly([-20468736, -1080, 1])
    assert hm.gfpoly.reduce_mod(poly, 5) == FpPoly([4, 0, 1], 5)
    assert hm.gfpoly.reduce_mod(poly, 7) == FpPoly([6, 5, 1], 7)


def test_factor_small_cases():
    fact = hm.gfpoly.factor(FpPoly([4, 0, 1], 5))
    assert fact.roots() == [1, 4]
    assert str(fact) == "(x + 1)(x + 4)"
    assert fact.partition() == (1, 1)
    fact = hm.gfpoly.factor(FpPoly([0, 1, 0, 0, 1], 2))
    assert [poly.to_list() for poly, _ in fact.factors] == [[0, 1], [1, 1], [1, 1, 1]]
    fact = hm.gfpoly.factor(FpPoly([2, 0, 0, 1], 3))
    assert str(fact) == "(x + 2)^3"
    assert not fact.is_squarefree
    fact = hm.gfpoly.factor(FpPoly([0, 0, 3], 5))
    assert fact.unit == 3
    assert str(fact) == "3(x)^2"
    with pytest.raises(ValueError):
        hm.gfpoly.factor(FpPoly([], 5))


@pytest.mark.parametrize("ell", [2, 3, 5, 7, 13, 101])
def test_factor_against_sympy(ell):
    rng = np.random.default_rng(11 + ell)
    for _ in range(500):
        poly = _random_poly(rng, ell, int(rng.integers(1, 9)))
        fact = hm.gfpoly.factor(poly)
        lead, theirs = gf_factor([ZZ(cc) for cc in reversed(poly.to_list())], ell, ZZ)
        expected = sorted(
            (tuple(int(cc) for cc in reversed(ff)), mult) for ff, mult in theirs
        )
        ours = sorted((tuple(ff.to_list()), mult) for ff, mult in fact.factors)
        assert int(lead) == fact.unit
        assert ours == expected
        assert fact.expand() == poly
        for ff, _ in fact.factors:
            assert ff.to_list()[-1] == 1
            assert hm.gfpoly.is_irreducible(ff)


def _trial_division(poly):
    ell = poly.ell
    rest = poly.monic()
    found = {}
    for degree in range(1, poly.degree + 1):
        if rest.degree < degree:
            break
        for tail in itertools.product(range(ell), repeat=degree):
            divisor = FpPoly(list(tail) + [1], ell)
            while rest.degree >= degree:
                quo, rem = divmod(rest, divisor)
                if not rem.is_zero():
                    break
                rest = quo
                key = tuple(divisor.to_list())
                found[key] = found.get(key, 0) + 1
    assert rest == FpPoly([1], ell)
    return sorted(found.items())


@pytest.mark.parametrize("ell", [2, 3, 5, 7])
def test_factor_every_small_polynomial(ell):
    for degree in (1, 2, 3):
        for tail in itertools.product(range(ell), repeat=degree):
            poly = FpPoly(list(tail) + [1], ell)
            fact = hm.gfpoly.factor(poly)
            ours = sorted((tuple(ff.to_list()), mult) for ff, mult in fact.factors)
            assert fact.unit == 1
            assert ours == _trial_division(poly)
            assert fact.is_irreducible == (ours == [(tuple(poly.to_list()), 1)])


def test_factor_does_not_depend_on_seed():
    rng = np.random.default_rng(5)
    for ell in (2, 3, 13):
        poly = _random_poly(rng, ell, 12)
        assert hm.gfpoly.factor(poly, seed=0) == hm.gfpoly.factor(poly, seed=2 ** 64 - 1)


def test_rabin_against_sympy():
    rng = np.random.default_rng(2)
    for ell in (2, 3, 5, 7):
        for _ in range(40):
            poly = _random_poly(rng, ell, int(rng.integers(1, 7))).monic()
            expected = gf_irreducible_p(
                [ZZ(cc) for cc in reversed(poly.to_list())], ell, ZZ
            )
            assert hm.gfpoly.is_irreducible(poly) == bool(expected)


def test_is_squarefree():
    assert hm.gfpoly.is_squarefree(FpPoly([4, 0, 1], 5))
    assert not hm.gfpoly.is_squarefree(FpPoly([1, 2, 1], 5))
    assert not hm.gfpoly.is_squarefree(FpPoly([], 5))


def test_from_roots_and_factor_int_poly():
    fact = hm.gfpoly.from_roots([4, 1, 1], 5)
    assert fact.roots() == [1, 1, 4]
    assert fact.expand() == FpPoly([4, 1], 5) ** 2 * FpPoly([1, 1], 5)
    poly = hm.hecke.IntPoly([-20468736, -1080, 1])
    assert hm.gfpoly.factor_int_poly(poly, 7).roots() == [4, 5]
    assert hm.gfpoly.roots(FpPoly([1, 0, 1], 7)) == []
