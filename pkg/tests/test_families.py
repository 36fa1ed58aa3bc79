import pytest
from hypothesis import given, strategies as st

from cyclicfam import cycliccode as cc
from cyclicfam import families as fam
from cyclicfam.field import make_field
from cyclicfam.znsets import mod3_set, mod4_set


def test_build_examples():
    assert (fam.build_mod3_code(1, 3).n, fam.build_mod3_code(1, 3).k) == (7, 4)
    assert fam.build_mod3_code(0, 5).k == 21
    assert fam.build_mod3_code(2, 4).k == 9
    assert fam.build_mod4_code(0, 3, 5).k == 16
    assert fam.build_mod4_code(1, 2, 5).k == 16
    assert fam.build_mod4_code(0, 1, 7).k == 64


@pytest.mark.parametrize("args", [(3, 5), (0, 1)])
def test_build_mod3_rejects(args):
    with pytest.raises(ValueError):
        fam.build_mod3_code(*args)


@pytest.mark.parametrize("args", [(0, 0, 5), (0, 4, 5), (0, 3, 6)])
def test_build_mod4_rejects(args):
    with pytest.raises(ValueError):
        fam.build_mod4_code(*args)


def test_duadic_pair():
    a, b = fam.duadic_pair(5)
    assert a.T == mod4_set(0, 3, 5) and b.T == mod4_set(1, 2, 5)
    a, b = fam.duadic_pair(7)
    assert a.T == mod4_set(0, 1, 7) and b.T == mod4_set(2, 3, 7)
    with pytest.raises(ValueError):
        fam.duadic_pair(4)


def test_s_class_counts():
    s = fam.s_class_counts(3)
    assert (s.s0, s.s1, s.s2) == (2, 3, 3) and s.identity_value() == 1
    s = fam.s_class_counts(1)
    assert (s.s0, s.s1, s.s2) == (1, 1, 0)
    s = fam.s_class_counts(40)
    assert s.sum_ok() and s.identity_value() == 1


@given(st.integers(1, 64))
def test_s_class_invariants(m):
    s = fam.s_class_counts(m)
    assert s.sum_ok() and s.identity_value() == 1


def test_catalog_ids_unique():
    assert len(fam.LEMMA_BY_ID) == len(fam.LEMMAS)
    assert len(fam.THEOREM_BY_ID) == len(fam.THEOREMS)


def test_lemma_examples():
    c = fam.LEMMA_BY_ID["in:T0:m%6=5"]
    assert fam.evaluate(c.v, 5) == 7 and fam.verify_lemma(c, 5)
    c = fam.LEMMA_BY_ID["in:T1:m%6=1"]
    assert fam.evaluate(c.v, 7) == 15 and fam.evaluate(c.ranges[0][1], 7) == 10 and fam.verify_lemma(c, 7)
    c = fam.LEMMA_BY_ID["in:T03:m%8=1"]
    assert fam.evaluate(c.v, 9) == 15 and fam.evaluate(c.ranges[0][1], 9) == 18 and fam.verify_lemma(c, 9)


def test_lemma_inapplicable():
    with pytest.raises(fam.ClaimNotApplicable):
        fam.verify_lemma(fam.LEMMA_BY_ID["in:T0:m%6=5"], 7)


def test_lemma_witness_on_tampered_claim():
    good = fam.LEMMA_BY_ID["in:T0:m%6=5"]
    bad = fam.LemmaClaim(good.target, good.side, good.cond, good.v, (("1", "2^((m-1)/2)+1"),))
    assert fam.lemma_witness(bad, 5) == 5
    # w2(3) = 2, so 3 lies outside T0
    assert fam.lemma_witness(fam.LemmaClaim("T0", "in", good.cond, "3", (("1", "1"),)), 5) == 1
    # gcd(3, 15) != 1
    assert fam.lemma_witness(fam.LemmaClaim("T0", "in", fam.Condition(2, 0, 4), "3", (("1", "1"),)), 4) == -1


def test_theorem_examples():
    dim = fam.expected_dimension
    assert dim(fam.THEOREM_BY_ID["primal:T0:m%6=1"], 7) == 85
    assert dim(fam.THEOREM_BY_ID["primal:T0:m%6=3"], 9) == 343
    assert dim(fam.THEOREM_BY_ID["dual:T0:m%6=3"], 9) == 168
    assert fam.expected_bound(fam.THEOREM_BY_ID["primal:T0:m%6=1"], 7) == 11
    assert fam.expected_bound(fam.THEOREM_BY_ID["primal:T03:m%8=5"], 5) == 5
    assert fam.expected_bound(fam.THEOREM_BY_ID["extended:T03:m%4=1"], 5) == 8
    with pytest.raises(fam.ClaimNotApplicable):
        dim(fam.THEOREM_BY_ID["primal:T0:m%6=1"], 5)


def test_m3_duadic_construction_but_no_extension_claim():
    assert fam.THEOREM_BY_ID["primal:T01:m%8=3"].cond.holds(3)
    assert not fam.THEOREM_BY_ID["extended:T01:m%4=3"].cond.holds(3)


def test_lemma_report_small():
    rows = fam.lemma_report(12)
    assert rows and all(r["status"] == "pass" for r in rows)
    assert set(rows[0]) == {"claim_id", "m", "status"}


def test_dimension_report_and_dual_relation():
    rows = fam.dimension_report(14)
    assert rows and all(r["status"] == "pass" for r in rows)
    for m in range(3, 10):
        for i in range(3):
            c = fam.build_mod3_code(i, m)
            assert c.k + cc.dual(c).k == c.n


def test_bound_report_small():
    rows = fam.bound_report(11)
    assert rows and all(r["status"] == "pass" for r in rows)


def test_extended_bound_lift():
    assert fam.extended_bound(7, doubly_even=True) == 8
    assert fam.extended_bound(9, doubly_even=True) == 12
    assert fam.extended_bound(9, doubly_even=False) == 10


@pytest.mark.parametrize("m", [3, 5, 7, 9])
def test_duadic_structure(m):
    rows = fam.verify_duadic_structure(m)
    assert all(r["status"] in ("pass", "skipped") for r in rows)
    checks = {r["check"] for r in rows}
    assert {"splitting", "dual_is_even_like", "extended_self_dual", "extended_doubly_even_basis",
            "square_root_bound"} <= checks
    if m <= 5:
        sq = [r for r in rows if r["check"] == "square_root_bound"]
        assert all(r["status"] == "pass" for r in sq)


def test_duadic_structure_m5_values():
    sq = [r for r in fam.verify_duadic_structure(5) if r["check"] == "square_root_bound"]
    assert sq[0]["detail"] == {"d_o": 7, "lhs": 43, "n": 31}


def test_duadic_structure_m7_skips_enumeration():
    sq = [r for r in fam.verify_duadic_structure(7) if r["check"] == "square_root_bound"]
    assert all(r["status"] == "skipped" for r in sq)


def test_duadic_structure_rejects_even():
    with pytest.raises(fam.ClaimNotApplicable):
        fam.verify_duadic_structure(6)


def test_family_selector():
    assert fam.family_members("duadic", 4) == []
    assert fam.member_label("duadic", 7, 1) == "duadic[2,3]"
    assert fam.member_label("prm-dual", 7, 3) == "prm-dual[r=3]"
    assert fam.build_family_code("prm", 7, 3).k == 64
    assert fam.build_family_code("mod3-dual", 4, 0) == cc.dual(fam.build_mod3_code(0, 4))
    with pytest.raises(ValueError):
        fam.family_members("bogus", 5)
    with pytest.raises(ValueError):
        fam.build_family_code("mod3", 5, 7)
