import numpy as np
import pytest
from hypothesis import given, strategies as st

from cyclicfam import znsets as zs
from cyclicfam.znsets import DefiningSet, SplittingSpec, WeightClassSpec

from tests.oracles import coset_slow, longest_run_slow, w2_slow


def test_w2_examples():
    assert zs.w2(0) == 0 and zs.w2(7) == 3 and zs.w2(21, 5) == 3


def test_coset_examples():
    assert zs.cyclotomic_coset(0, 7) == {0}
    assert zs.cyclotomic_coset(1, 7) == {1, 2, 4}
    assert zs.cyclotomic_coset(3, 15) == {3, 6, 12, 9}


@pytest.mark.parametrize("m", range(2, 17))
def test_w2_constant_on_cosets(m):
    n = (1 << m) - 1
    w = zs.weights_table(n)
    for c in zs.cyclotomic_cosets(n):
        c = sorted(c)
        assert (w[c] == w[c[0]]).all()


@pytest.mark.parametrize("m", [3, 6, 9])
def test_cosets_match_oracle(m):
    n = (1 << m) - 1
    got = {frozenset(c) for c in zs.cyclotomic_cosets(n)}
    assert got == {frozenset(coset_slow(s, n)) for s in range(n)}


def test_weight_class_examples():
    assert len(zs.weight_class_set(WeightClassSpec(3, {0}, 3))) == 0
    assert zs.weight_class_set(WeightClassSpec(3, {2}, 3)).to_set() == {3, 5, 6}
    T = zs.weight_class_set(WeightClassSpec(4, {0, 3}, 5))
    assert len(T) == 15 and all(w2_slow(t) in (3, 4) for t in T)


@pytest.mark.parametrize("bad", [(1, {0}, 5), (3, set(), 5), (3, {0, 1, 2}, 5), (3, {0}, 1)])
def test_weight_class_spec_validation(bad):
    with pytest.raises(ValueError):
        WeightClassSpec(*bad)


@given(st.integers(2, 16), st.integers(2, 6), st.data())
def test_weight_class_sets_closed_and_counted(m, r, data):
    S = data.draw(st.sets(st.integers(0, r - 1), min_size=1, max_size=r - 1))
    spec = WeightClassSpec(r, S, m)
    T = zs.weight_class_set(spec)
    assert T.is_coset_closed()
    assert len(T) == zs.weight_class_count(spec)


def test_prm_sets():
    assert len(zs.prm_defining_set(6, 7)) == 0
    assert zs.prm_defining_set(1, 3).to_set() == {1, 2, 4}
    assert 127 - len(zs.prm_defining_set(3, 7)) == 64


def test_negate_examples():
    assert len(zs.negate_set(DefiningSet.empty(7))) == 0
    assert zs.negate_set(DefiningSet.from_members(7, [1, 2, 4])).to_set() == {3, 5, 6}
    for m in (7, 13):
        assert zs.negate_set(zs.mod3_set(0, m)) == zs.mod3_set(1, m)


def test_scale_examples():
    T = zs.mod3_set(0, 5)
    assert zs.scale_set(T, 1) == T
    assert zs.scale_set(zs.scale_set(T, 7), pow(7, -1, 31)) == T
    assert {1, 2, 3, 4} <= zs.scale_set(T, pow(7, -1, 31)).to_set()
    with pytest.raises(zs.DefiningSetError):
        zs.scale_set(zs.mod3_set(0, 4), 3)


def test_run_examples():
    assert zs.longest_cyclic_run(DefiningSet.empty(7))[1] == 0
    assert zs.longest_run_in_mask(np.array([1, 1, 0, 0, 0, 0, 1], bool)) == (6, 3)
    assert zs.longest_cyclic_run(DefiningSet.from_members(7, [1, 2, 4]))[1] == 2
    assert zs.longest_cyclic_run(DefiningSet.full(7)) == (0, 7)


@given(st.lists(st.booleans(), min_size=1, max_size=40))
def test_runs_match_oracle(bits):
    mask = np.array(bits, dtype=bool)
    assert zs.longest_run_in_mask(mask) == longest_run_slow(np.flatnonzero(mask).tolist(), len(bits))


def test_coset_closure_is_enforced():
    with pytest.raises(zs.DefiningSetError):
        DefiningSet.from_members(7, [1, 2])


@given(st.integers(3, 10), st.data())
def test_set_algebra(m, data):
    n = (1 << m) - 1
    cosets = zs.cyclotomic_cosets(n)
    chosen = data.draw(st.lists(st.sampled_from(cosets), unique_by=min))
    T = DefiningSet.from_members(n, [t for c in chosen for t in c])
    u = data.draw(st.sampled_from(zs.units(n)))
    for S in (zs.negate_set(T), zs.scale_set(T, u)):
        assert S.is_coset_closed() and len(S) == len(T)
    C = zs.complement(T)
    assert len(C & T) == 0 and (C | T) == DefiningSet.full(n)
    assert zs.negate_set(zs.negate_set(T)) == T


def test_splitting_examples():
    assert zs.is_splitting(SplittingSpec(zs.mod4_set(0, 3, 5), zs.mod4_set(1, 2, 5), -1))
    assert zs.is_splitting(SplittingSpec(zs.mod4_set(0, 1, 7), zs.mod4_set(2, 3, 7), -1))
    T = zs.mod4_set(0, 3, 5)
    assert not zs.is_splitting(SplittingSpec(T, T, -1))


@pytest.mark.parametrize("m", [3, 5, 7, 9, 11, 13])
def test_duadic_sets_partition_and_swap(m):
    a, b = ((0, 3), (1, 2)) if m % 4 == 1 else ((0, 1), (2, 3))
    S1, S2 = zs.mod4_set(*a, m), zs.mod4_set(*b, m)
    assert len(S1 & S2) == 0 and len(S1 | S2) == S1.n - 1
    assert zs.negate_set(S1) == S2
