from ualgebra.utils.helpers import format_elements
from ualgebra.utils.helpers import merge_dicts
from ualgebra.utils.helpers import tuples


def test_merge_dicts():
    d1 = {"a": {"b": 1, "c": 2}, "d": 3}
    merge_dicts(d1, {"a": {"b": 4}, "e": 5})

    assert d1 == {"a": {"b": 4, "c": 2}, "d": 3, "e": 5}


def test_tuples_vary_the_last_coordinate_fastest():
    assert list(tuples(range(2), 2)) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert list(tuples(range(3), 0)) == [()]


def test_format_elements():
    assert format_elements({2, 0}) == "{0 2}"
