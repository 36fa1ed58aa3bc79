import pytest
from hypothesis import given, settings, strategies as st

from cyclicfam import cycliccode as cc
from cyclicfam import distance as ds
from cyclicfam.families import build_mod3_code, build_mod4_code, duadic_pair
from cyclicfam.field import make_field
from cyclicfam.gf2linalg import BitMatrix
from cyclicfam.znsets import DefiningSet, cyclotomic_cosets

from tests.oracles import min_distance_bruteforce, weight_distribution_bruteforce


def repetition(m):
    f = make_field(m)
    return cc.from_defining_set(DefiningSet.from_members(f.n, range(1, f.n)), f)


def test_hamming_distribution():
    assert ds.weight_distribution(build_mod3_code(1, 3)) == [1, 0, 0, 7, 7, 0, 0, 1]


def test_repetition_distribution():
    dist = ds.weight_distribution(repetition(4))
    assert dist[0] == 1 and dist[15] == 1 and sum(dist) == 2


def test_exhaustive_examples():
    assert ds.min_distance_exhaustive(build_mod3_code(1, 3)) == 3
    assert ds.min_distance_exhaustive(build_mod3_code(0, 5)) == 5
    assert ds.min_distance_exhaustive(build_mod4_code(0, 3, 5)) == 7
    assert ds.min_distance_exhaustive(cc.dual(cc.from_defining_set(DefiningSet.empty(7), make_field(3)))) is None


def test_exhaustive_limit():
    with pytest.raises(ds.EngineLimitError, match="k <= 10"):
        ds.min_distance_exhaustive(build_mod3_code(0, 5), k_limit=10)


def test_min_odd_weight():
    assert ds.min_odd_weight(build_mod4_code(0, 3, 5)) == 7
    assert ds.min_odd_weight(build_mod3_code(1, 3)) == 3
    with pytest.raises(ds.NoOddWeightError):
        ds.min_odd_weight(cc.even_like_subcode(build_mod3_code(1, 3)))


def test_mitm_examples():
    assert ds.min_distance_mitm(build_mod3_code(1, 3), 3) == 3
    assert ds.min_distance_mitm(repetition(4), 8) is None
    assert ds.min_distance_mitm(build_mod3_code(0, 6), 8) == 6


def test_mitm_memory_budget():
    with pytest.raises(ds.EngineLimitError, match="half-subsets"):
        ds.min_distance_mitm(build_mod3_code(0, 6), 8, memory_limit=1 << 16)


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_mitm_agrees_with_exhaustive(m):
    f = make_field(m)
    codes = [build_mod3_code(i, m, f) for i in range(3)]
    codes += [cc.dual(c) for c in codes]
    if m % 2:
        codes += list(duadic_pair(m, f))
    for c in codes:
        if c.k == 0 or c.k > 22:
            continue
        d = ds.min_distance_exhaustive(c)
        if d <= 8:
            assert ds.min_distance_mitm(c, 8) == d
            assert ds.min_distance_mitm(c, 8, cyclic=False) == d
            assert ds.min_distance_mitm(c.generator_matrix, 8) == d
        else:
            assert ds.min_distance_mitm(c, 8) is None


@given(st.integers(3, 5), st.data())
def test_engines_match_oracle_on_random_cyclic_codes(m, data):
    f = make_field(m)
    cosets = cyclotomic_cosets(f.n)
    chosen = data.draw(st.lists(st.sampled_from(cosets), unique_by=min, min_size=1))
    c = cc.from_defining_set(DefiningSet.from_members(f.n, [t for x in chosen for t in x]), f)
    if c.k == 0 or c.k > 11:
        return
    rows = c.generator_matrix.rows
    assert ds.weight_distribution(c) == weight_distribution_bruteforce(rows, c.n)
    d = min_distance_bruteforce(rows)
    assert ds.min_distance_exhaustive(c) == d
    if d <= 8:
        assert ds.min_distance_mitm(c, d) == d
        assert ds.min_distance_mitm(c, d - 1) is None


@settings(max_examples=25)
@given(st.integers(0, 2**31), st.integers(3, 8))
def test_search_returns_codewords(seed, target):
    c = build_mod3_code(0, 5)
    word = ds.low_weight_search(c, target, 50, seed)
    if word is not None:
        assert 0 < word.bit_count() <= target and ds.is_codeword(word, c)


def test_search_deterministic_and_trivial_target():
    c1, _ = duadic_pair(7)
    a = ds.low_weight_search_with_stats(c1, 15, 200, 42)
    b = ds.low_weight_search_with_stats(c1, 15, 200, 42)
    assert a == b and a[0].bit_count() <= 15
    assert ds.is_codeword(a[0], c1) and not ds.is_codeword(a[0] ^ 1, c1)
    assert ds.low_weight_search(c1, 127, 1, 0) is not None


def test_search_on_plain_matrix():
    G = build_mod3_code(1, 3).generator_matrix
    word = ds.low_weight_search(BitMatrix(G.rows, G.cols), 3, 10, 1)
    assert word.bit_count() == 3 and ds.is_codeword(word, G)


def test_search_validation():
    with pytest.raises(ValueError):
        ds.low_weight_search(build_mod3_code(1, 3), 3, 0, 1)
    with pytest.raises(ValueError):
        ds.low_weight_search(build_mod3_code(1, 3), 3, 5, 1, p=3)
