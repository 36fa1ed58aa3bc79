import json

import pytest
from hypothesis import given, strategies as st

from cyclicfam.cycliccode import BchCertificate
from cyclicfam.records import CodeRecord, from_csv, to_csv, to_jsonl

opt = st.none() | st.integers(1, 200)


@st.composite
def records(draw):
    lo = draw(opt)
    ex = draw(opt)
    up = draw(opt)
    vals = sorted(v for v in (lo, ex, up) if v is not None)
    it = iter(vals)
    lo, ex, up = (next(it) if v is not None else None for v in (lo, ex, up))
    cert = draw(st.none() | st.builds(BchCertificate, st.integers(1, 100), st.integers(0, 100), st.integers(0, 100)))
    return CodeRecord(draw(st.sampled_from(["mod3[0]", "duadic[0,3]"])), draw(st.integers(2, 20)),
                      draw(st.integers(1, 1000)), draw(st.integers(0, 1000)), lo,
                      draw(st.sampled_from(["exhaustive", "randomized"])), cert, ex, up, draw(opt))


@given(records())
def test_json_and_csv_agree(rec):
    via_json = CodeRecord.from_dict(json.loads(rec.to_json()))
    (via_csv,) = from_csv(to_csv([rec]))
    assert via_json == rec == via_csv


def test_schema_keys():
    rec = CodeRecord("mod3[1]", 3, 7, 4, 3, "exhaustive", BchCertificate(1, 1, 2), d_exact=3)
    d = json.loads(to_jsonl([rec]))
    assert list(d) == ["family", "m", "n", "k", "d_lower", "d_exact", "d_upper", "method", "seed", "certificate"]
    assert d["certificate"] == {"u": 1, "start": 1, "length": 2}


@pytest.mark.parametrize("lo, ex, up", [(5, 4, None), (None, 6, 5), (7, None, 6)])
def test_ordering_invariant(lo, ex, up):
    with pytest.raises(ValueError):
        CodeRecord("x", 3, 7, 4, lo, "m", None, ex, up)
