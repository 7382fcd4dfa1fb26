import pytest
import heckemod as hm
from heckemod.errors import FalsificationError

FpPoly = hm.gfpoly.FpPoly


def test_charpoly_mod_examples():
    assert hm.modfactor.charpoly_mod(2, 12, 13) == FpPoly([11, 1], 13)
    assert hm.modfactor.charpoly_mod(2, 24, 5) == FpPoly([4, 0, 1], 5)
    assert hm.modfactor.charpoly_mod(2, 10, 7).is_one()


def test_charpoly_mod_rejects_bad_arguments():
    with pytest.raises(ValueError):
        hm.modfactor.charpoly_mod(5, 12, 5)
    with pytest.raises(ValueError):
        hm.modfactor.charpoly_mod(4, 12, 5)
    with pytest.raises(ValueError):
        hm.modfactor.charpoly_mod(2, 13, 5)


def test_charpoly_source_is_used():
    calls = []

    def source(p, k):
        calls.append((p, k))
        return hm.hecke.IntPoly([1, 1])

    assert hm.modfactor.charpoly_mod(3, 12, 5, source) == FpPoly([1, 1], 5)
    assert calls == [(3, 12)]


def test_lemma1_check():
    assert hm.modfactor.lemma1_check(2, 5, 20) == FpPoly([1, 1], 5)
    assert hm.modfactor.lemma1_check(2, 5, 12).is_one()
    assert hm.modfactor.lemma1_check(3, 7, 12).degree == 0
    with pytest.raises(ValueError):
        hm.modfactor.lemma1_check(2, 3, 12)


def test_lemma1_violation_is_a_falsification():
    def source(p, k):
        if k == 16:
            return hm.hecke.IntPoly([2, 1])
        return hm.hecke.IntPoly([1, 1])

    with pytest.raises(FalsificationError) as info:
        hm.modfactor.lemma1_check(2, 5, 12, source)
    assert info.value.claim == "lemma1"
    assert info.value.details["k"] == 12


def test_lemma1_sweep_counts_checks():
    assert hm.modfactor.lemma1_sweep([2, 5], [5], 40) == 15
    assert hm.modfactor.lemma1_sweep([2, 3], [5, 7], 20) == 20


def test_class_weights():
    assert hm.modfactor.class_weights(5, 0, 30) == [12, 16, 20, 24, 28]
    assert hm.modfactor.class_weights(5, 2, 30) == [14, 18, 22, 26, 30]
    assert hm.modfactor.class_weights(13, 4, 60) == [16, 28, 40, 52]
    assert hm.modfactor.default_max_weight(5, 2) == 98
    assert hm.modfactor.default_max_weight(13, 10) == 370
    assert hm.modfactor.default_max_weight(13, 0, single_period=True) == 180


def test_detect_period():
    assert hm.modfactor.detect_period([1, 4, 1, 4, 1]) == 2
    assert hm.modfactor.detect_period([0] * 5) == 1
    assert hm.modfactor.detect_period([0, 1, 0, 6, 0, 1, 0, 6]) == 4
    assert hm.modfactor.detect_period([1, 2, 3]) is None
    assert hm.modfactor.detect_period([1, 2, 1, 2, 1, 2], max_period=1) is None
    assert hm.modfactor.detect_period([]) is None


def test_root_sequence_period_two():
    seq = hm.modfactor.root_sequence(2, 5, 0)
    assert seq.period == 2
    assert seq.one_period() == (1, 4)
    assert seq.k0 == 12
    assert len(seq.terms) == hm.hecke.dim_cusp(seq.verified_weight)


def test_root_sequence_prefix_property():
    seq = hm.modfactor.root_sequence(3, 7, 0)
    assert seq.one_period() == (0, 1, 0, 6)
    for kk in hm.modfactor.class_weights(7, 0, seq.verified_weight):
        poly = hm.modfactor.charpoly_mod(3, kk, 7)
        dim = hm.hecke.dim_cusp(kk)
        assert hm.gfpoly.roots(poly) == sorted(seq.terms[:dim])


def test_root_sequence_single_period_skips_detection():
    seq = hm.modfactor.root_sequence(2, 5, 2, max_weight=30, single_period=True)
    assert seq.period is None
    assert seq.terms == (2, 3)
    assert hm.modfactor.table_sequence(seq) == (2, 3)


def test_root_sequence_rejects_bad_arguments():
    with pytest.raises(ValueError):
        hm.modfactor.root_sequence(2, 11, 0)
    with pytest.raises(ValueError):
        hm.modfactor.root_sequence(5, 5, 0)
    with pytest.raises(ValueError):
        hm.modfactor.root_sequence(2, 5, 3)


def test_root_sequence_reports_non_splitting():
    def source(p, k):
        # x^2 + 2 has no root mod 5
        if hm.hecke.dim_cusp(k) == 2:
            return hm.hecke.IntPoly([2, 0, 1])
        return hm.hecke.charpoly(hm.hecke.HeckeSpec(k=k, n=p))

    with pytest.raises(FalsificationError) as info:
        hm.modfactor.root_sequence(2, 5, 0, max_weight=40, source=source)
    assert info.value.claim == "splitting"


def test_root_sequence_reports_missing_period():
    def source(p, k):
        # roots 0, 1, ..., d_k - 1 never repeat
        product = hm.gfpoly.from_roots(range(hm.hecke.dim_cusp(k)), 5).expand()
        return hm.hecke.IntPoly(product.to_list())

    with pytest.raises(FalsificationError) as info:
        hm.modfactor.root_sequence(2, 5, 0, max_weight=60, source=source)
    assert info.value.claim == "period"


def test_quotient_sequence():
    seq = hm.modfactor.quotient_sequence(2, 5, 0)
    assert seq.period == 6
    assert seq.max_degree() == 1
    assert seq.terms[0].is_one()
    assert seq.terms[2] == FpPoly([1, 1], 5)
    assert seq.terms[5] == FpPoly([4, 1], 5)


def test_paper_tables_shape():
    assert len(hm.modfactor.PAPER_TABLE_5) == 8
    assert len(hm.modfactor.PAPER_TABLE_7) == 18
    assert len(hm.modfactor.PAPER_TABLE_13) == 6
    assert [p for p, _ in hm.modfactor.PAPER_TABLE_7][::3] == [29, 2, 3, 11, 5, 13]
    for period in hm.modfactor.PAPER_TABLE_13.values():
        assert len(period) == 14
    with pytest.raises(ValueError):
        hm.modfactor.paper_table(11)


def test_compare_with_paper_reports_mismatches():
    seq = hm.modfactor.RootSequence(
        p=2, ell=5, kclass=0, k0=12, terms=(4, 1, 4, 1), period=2, verified_weight=56
    )
    mismatches = hm.modfactor.compare_with_paper({(2, 0): seq}, 5)
    assert mismatches == [
        {"p": 2, "kclass": 0, "expected": [1, 4], "computed": [4, 1]}
    ]


def test_small_ell_rule():
    assert hm.modfactor.small_ell_rule(7, 24, 3) == FpPoly([1, 2, 1], 3)
    assert hm.modfactor.small_ell_rule(5, 12, 2) == FpPoly([0, 1], 2)
    assert hm.modfactor.small_ell_rule(5, 10, 2).is_one()
    assert hm.modfactor.small_ell_rule(2, 36, 3) == FpPoly([0, 0, 0, 1], 3)
    with pytest.raises(ValueError):
        hm.modfactor.small_ell_rule(2, 24, 2)
    with pytest.raises(ValueError):
        hm.modfactor.small_ell_rule(3, 24, 3)


def test_congruence_class_invariance():
    assert hm.modfactor.congruence_class_invariance(2, 7, 5, 24)
    assert hm.modfactor.congruence_class_invariance(3, 13, 5, 24)
    assert hm.modfactor.congruence_class_invariance(2, 2, 7, 36)
    with pytest.raises(ValueError):
        hm.modfactor.congruence_class_invariance(2, 3, 5, 24)
    with pytest.raises(ValueError):
        hm.modfactor.congruence_class_invariance(2, 15, 13, 24)
    with pytest.raises(ValueError, match="differ from ell"):
        hm.modfactor.congruence_class_invariance(5, 5, 5, 24)
    with pytest.raises(ValueError, match="differ from ell"):
        hm.modfactor.congruence_class_invariance(7, 7, 7, 24)


def test_serre_classification_check():
    assert hm.modfactor.serre_classification_check(5, 2, 24)
    assert hm.modfactor.serre_classification_check(3, 7, 12)
    assert hm.modfactor.serre_classification_check(7, 13, 12)
    with pytest.raises(ValueError):
        hm.modfactor.serre_classification_check(11, 2, 24)
