import math
import numpy as np
import pytest
import sympy
from fractions import Fraction
import heckemod as hm
from heckemod.errors import FalsificationError

IntPoly = hm.hecke.IntPoly
galois = hm.galois

X4_PLUS_1 = IntPoly([1, 0, 0, 0, 1])
CYCLIC_CUBIC = IntPoly([-1, -2, 1, 1])
A4_QUARTIC = IntPoly([12, 8, 0, 0, 1])


def test_cycle_type():
    assert galois.cycle_type([1, 0, 0, 0, 1], 3) == galois.CycleType((2, 2), 3)
    assert galois.cycle_type([1, 0, 0, 0, 1], 17).parts == (1, 1, 1, 1)
    assert galois.cycle_type([2, 0, 0, 1], 7).parts == (3,)
    assert galois.cycle_type([2, 0, 0, 1], 5).parts == (2, 1)
    failure = galois.cycle_type([1, 0, 0, 0, 1], 2)
    assert isinstance(failure, galois.SquarefreeFailure)
    with pytest.raises(ValueError):
        galois.cycle_type([1, 2], 5)


def test_cycle_type_powers():
    ctype = galois.CycleType((2, 1, 1), 5)
    assert ctype.has_transposition()
    assert ctype.degree == 4
    assert not galois.CycleType((2, 2), 5).has_transposition()
    assert galois.CycleType((5, 2), 3).yields_cycle(5)
    assert not galois.CycleType((5, 5), 3).yields_cycle(5)
    assert not galois.CycleType((4, 2), 3).has_transposition()
    assert str(galois.CycleType((2, 1), 5)) == "[2,1]"


def test_proper_degree_set():
    assert galois.proper_degree_set((2, 2)) == {2}
    assert galois.proper_degree_set((3, 1)) == {1, 3}
    assert galois.proper_degree_set((4,)) == set()
    assert galois.proper_degree_set((1, 1, 1, 1)) == {1, 2, 3}


def test_x4_plus_1_is_not_certified_by_reductions():
    result = galois.certify_irreducible_poly(X4_PLUS_1, 200)
    assert isinstance(result, galois.NotFound)
    assert "[2]" in result.reason
    assert result.to_dict()["found"] is False
    full = galois.certify_full_symmetric_poly(X4_PLUS_1, 500)
    assert isinstance(full, galois.NotFound)
    assert full.reason.startswith("missing irreducibility")


def test_x4_plus_1_is_never_irreducible_mod_ell():
    for ell in sympy.primerange(3, 200):
        fact = hm.gfpoly.factor(hm.gfpoly.reduce_mod(X4_PLUS_1, ell))
        assert not fact.is_irreducible


def test_cycle_types_are_sound():
    rng = np.random.default_rng(19)
    primes = list(sympy.primerange(2, 60))
    seen = 0
    for _ in range(200):
        degree = int(rng.integers(1, 7))
        coeffs = [int(cc) for cc in rng.integers(-20, 21, size=degree)] + [1]
        ell = int(rng.choice(primes))
        result = galois.cycle_type(coeffs, ell)
        reduced = hm.gfpoly.reduce_mod(coeffs, ell)
        fact = hm.gfpoly.factor(reduced)
        if isinstance(result, galois.SquarefreeFailure):
            assert not hm.gfpoly.is_squarefree(reduced)
            continue
        seen += 1
        assert hm.gfpoly.is_squarefree(reduced)
        assert result.ell == ell
        assert result.degree == degree
        assert list(result.parts) == sorted(
            (ff.degree for ff, mult in fact.factors for _ in range(mult)),
            reverse=True,
        )
        for ff, mult in fact.factors:
            assert mult == 1
            assert hm.gfpoly.is_irreducible(ff)
        assert fact.expand() == reduced
    assert seen > 100


def test_certificates_are_sound():
    rng = np.random.default_rng(7)
    xx = sympy.symbols("x")
    for _ in range(200):
        degree = int(rng.integers(2, 7))
        coeffs = [int(cc) for cc in rng.integers(-6, 7, size=degree)] + [1]
        poly = IntPoly(coeffs)
        result = galois.certify_irreducible_poly(poly, 60)
        if isinstance(result, galois.Certificate):
            assert sympy.Poly(coeffs[::-1], xx).is_irreducible
            for item in result.evidence:
                assert item.factorization.expand() == hm.gfpoly.reduce_mod(poly, item.ell)


def test_small_degree_certificates():
    cubic = galois.certify_full_symmetric_poly(IntPoly([2, 0, 0, 1]), 50)
    assert cubic.claim == galois.CLAIM_FULL_SYMMETRIC
    assert cubic.rule == galois.RULE_SMALL_DEGREE
    assert {item.ell for item in cubic.evidence} == {5, 7}
    irreducible = galois.certify_irreducible_poly(IntPoly([2, 0, 0, 1]), 50)
    assert irreducible.rule == galois.RULE_IRREDUCIBLE_MOD_ELL
    assert irreducible.details["witness_ell"] == 7


def test_quartic_and_quintic_full_symmetric():
    quartic = galois.certify_full_symmetric_poly(IntPoly([1, 1, 0, 0, 1]), 200)
    assert quartic.claim == galois.CLAIM_FULL_SYMMETRIC
    assert quartic.rule == galois.RULE_DOUBLY_TRANSITIVE
    quintic = galois.certify_full_symmetric_poly(IntPoly([-1, -1, 0, 0, 0, 1]), 200)
    assert quintic.rule == galois.RULE_DOUBLY_TRANSITIVE
    assert not quintic.conditional


def test_jordan_rule_in_degree_seven():
    # x^7 - x - 1 has Galois group S_7
    result = galois.certify_full_symmetric_poly(IntPoly([-1, -1, 0, 0, 0, 0, 0, 1]), 500)
    assert result.claim == galois.CLAIM_FULL_SYMMETRIC
    assert result.rule in (galois.RULE_JORDAN, galois.RULE_DOUBLY_TRANSITIVE)


def test_proper_subgroups_are_not_certified():
    cubic = galois.certify_full_symmetric_poly(CYCLIC_CUBIC, 300)
    assert isinstance(cubic, galois.NotFound)
    assert cubic.reason == "missing transposition"
    quartic = galois.certify_full_symmetric_poly(A4_QUARTIC, 300)
    assert isinstance(quartic, galois.NotFound)
    assert quartic.reason == "missing transposition"


def test_degree_set_sieve():
    result = galois.certify_irreducible_poly(A4_QUARTIC, 300)
    assert result.rule == galois.RULE_DEGREE_SET_SIEVE
    assert len(result.evidence) >= 2


def test_certify_hecke_polynomials():
    result = galois.certify_irreducible(2, 12, 50)
    assert result.subject == (2, 12)
    assert result.rule == galois.RULE_IRREDUCIBLE_MOD_ELL
    full = galois.certify_full_symmetric(2, 24, 100)
    assert full.claim == galois.CLAIM_FULL_SYMMETRIC
    assert all(item.ell != 2 for item in full.evidence)
    with pytest.raises(ValueError):
        galois.certify_irreducible(2, 10, 50)
    with pytest.raises(ValueError):
        galois.certify_irreducible(4, 12, 50)


def test_certificate_to_dict():
    result = galois.certify_full_symmetric(2, 24, 100)
    data = result.to_dict()
    assert data["subject"] == [2, 24]
    assert data["conditional"] is False
    assert all("roots" in item for item in data["evidence"])


def test_prop2_shape_filter():
    split = hm.gfpoly.from_roots([1, 4], 5)
    shape = galois.prop2_shape_filter(2, 24, [split])
    assert shape.verdict == "Irreducible+FullGalois"
    assert shape.surviving_r == ()
    assert shape.assumptions == (galois.ASSUME_FULL_GALOIS,)
    double = hm.gfpoly.from_roots([2, 2], 5)
    shape = galois.prop2_shape_filter(2, 24, [double])
    assert shape.verdict == "Inconclusive"
    assert shape.open_claims() == ["PowerOfIrreducible(2)", "LinearPower^2"]
    assert galois.prop2_shape_filter(2, 12, []).verdict == "Irreducible"
    squares = hm.gfpoly.from_roots([1, 1, 2, 2], 5)
    shape = galois.prop2_shape_filter(2, 48, [squares])
    assert shape.surviving_r == (2,)
    assert shape.linear_ruled_out


def test_theorem1():
    assert galois.theorem1_applies(2)
    assert galois.theorem1_applies(11)
    assert not galois.theorem1_applies(29)
    assert galois.theorem1_density() == Fraction(5, 6)
    conclusion = galois.theorem1_conclusion(3, 24)
    assert conclusion.applicable
    assert conclusion.ell == 5
    assert conclusion.roots == (2, 3)
    assert conclusion.claim == galois.CLAIM_FULL_SYMMETRIC
    assert not galois.theorem1_conclusion(29, 24).applicable
    with pytest.raises(ValueError):
        galois.theorem1_conclusion(9, 24)


def test_table_evidence():
    assert galois.table_evidence(2, 24, 5) == (1, 4)
    assert galois.table_evidence(7, 24, 5) == (1, 4)
    assert galois.table_evidence(3, 60, 7) == (0, 1, 0, 6, 0)
    assert galois.table_evidence(2, 12, 13) == (2,)


def test_corollary():
    assert galois.corollary_density() == Fraction(1, 2)
    odd = galois.corollary_conclusion(2, 36)
    assert odd.applicable and odd.case == "i"
    even = galois.corollary_conclusion(3, 24)
    assert even.applicable
    assert even.case == "ii"
    assert even.ell == 7
    assert even.claim == galois.CLAIM_IRREDUCIBLE
    assert not galois.corollary_conclusion(2, 24).applicable


def test_remark_t2_rule():
    conclusion = galois.remark_t2_rule(24)
    assert conclusion.applicable
    assert conclusion.case == "T2"
    assert conclusion.rule == galois.RULE_T2_REMARK
    with pytest.raises(ValueError):
        galois.remark_t2_rule(14)


def test_deduce_conditional():
    result = galois.deduce(24, [3, 5, 11, 29])
    assert result.base is None
    assert not result.unconditional
    certified = [item for item in result.theorem1 if isinstance(item, galois.Certificate)]
    assert [item.subject for item in certified] == [(3, 24), (5, 24), (11, 24)]
    assert all(item.assumptions == (galois.ASSUME_FULL_GALOIS,) for item in certified)
    assert not result.theorem1[3].applicable
    assert [isinstance(item, galois.Certificate) for item in result.corollary] == [
        True,
        True,
        False,
        False,
    ]


def test_deduce_unconditional():
    result = galois.deduce(24, [3, 7], bound=200)
    assert result.unconditional
    assert all(not item.conditional for item in result.theorem1)
    assert result.theorem1[0].details["base"] == [2, 24]
    assert result.to_dict()["unconditional"] is True


def test_deduce_rejects_wrong_table_roots():
    def source(p, k):
        # x^2 + 2 has no roots mod 5
        return IntPoly([2, 0, 1])

    with pytest.raises(FalsificationError) as info:
        galois.deduce(24, [3], source=source)
    assert info.value.claim == "table"


def test_full_symmetric_agrees_with_sympy():
    galoisgroups = pytest.importorskip("sympy.polys.numberfields.galoisgroups")
    xx = sympy.symbols("x")
    for expr in (
        xx**3 + 2,
        xx**3 + xx**2 - 2 * xx - 1,
        xx**4 - 2,
        xx**4 + xx**3 + xx**2 + xx + 1,
        xx**4 + xx + 1,
        xx**5 - xx - 1,
    ):
        poly = sympy.Poly(expr, xx)
        coeffs = [int(cc) for cc in reversed(poly.all_coeffs())]
        result = galois.certify_full_symmetric_poly(IntPoly(coeffs), 300)
        group, _ = galoisgroups.galois_group(poly)
        is_full = group.order() == math.factorial(poly.degree())
        assert isinstance(result, galois.Certificate) == is_full, expr
