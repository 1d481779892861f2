import json

from hypothesis import given, strategies as st

from vtab.cossz import cossz_forward
from vtab.di import di_forward
from vtab.serialize import (
    multiset_from_json,
    multiset_to_json,
    set_partition_from_json,
    set_partition_to_json,
    tableau_from_json,
    tableau_to_json,
    vt_from_json,
    vt_to_json,
)
from vtab.tableaux import set_partition_blocks

sequences = st.integers(1, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=5)))


def through_text(obj):
    return json.loads(json.dumps(obj))


def test_tableau_format():
    image = di_forward((3, 2, 5), 6)
    assert tableau_to_json(image.p) == {"rows": [[1, 2, 5], [3, 6], [4]]}
    assert tableau_from_json([[1, 2, 5], [3, 6], [4]]) == image.p


@given(sequences)
def test_round_trips(case):
    n, seq = case
    image = di_forward(seq, n)
    assert tableau_from_json(through_text(tableau_to_json(image.p))) == image.p
    assert vt_from_json(through_text(vt_to_json(image.gamma))) == image.gamma
    _, t = cossz_forward(seq, n)
    assert multiset_from_json(through_text(multiset_to_json(t))) == t
    p = set_partition_blocks(seq)
    assert set_partition_from_json(through_text(set_partition_to_json(p))) == p
