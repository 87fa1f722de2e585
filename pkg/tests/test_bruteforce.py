import pytest

from chordgenus.bruteforce import (
    DEFAULT_FULL_CAP,
    DEFAULT_PARTIAL_CAP,
    count_by_genus,
    count_by_genus_onechords,
    count_macromolecular,
    count_macromolecular_multi,
    count_shapes,
    double_factorial_odd,
    enumerate_chord_diagrams,
    enumerate_partial_diagrams,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]


def test_double_factorial():
    assert [double_factorial_odd(n) for n in range(6)] == [1, 1, 3, 15, 105, 945]


def test_stream_is_exhaustive_and_duplicate_free():
    for n in range(5):
        seen = set(enumerate_chord_diagrams(n))
        assert len(seen) == double_factorial_odd(n)


def test_partial_stream_counts_match_telephone_numbers():
    telephone = [1, 1, 2, 4, 10, 26, 76, 232]
    for n in range(8):
        assert sum(1 for _ in enumerate_partial_diagrams(n)) == telephone[n]


def test_partition_by_first_partner():
    n = 5
    parts = [
        sum(1 for _ in enumerate_chord_diagrams(n, first_partner=k))
        for k in range(2, 2 * n + 1)
    ]
    assert sum(parts) == double_factorial_odd(n)
    assert all(p == double_factorial_odd(n - 1) for p in parts)
    with pytest.raises(ValueError):
        next(enumerate_chord_diagrams(2, first_partner=1))


def test_caps_guard_large_inputs():
    with pytest.raises(ValueError):
        count_by_genus(DEFAULT_FULL_CAP + 1)
    with pytest.raises(ValueError):
        next(enumerate_partial_diagrams(DEFAULT_PARTIAL_CAP + 1))
    # explicit cap raises the limit
    assert count_by_genus(3, cap=3).total(3) == 15


def test_counts_by_genus_small():
    tbl = count_by_genus(6)
    for n in range(7):
        assert tbl.total(n) == double_factorial_odd(n)
        assert tbl.count(0, n) == CATALAN[n]
    assert tbl.count(1, 2) == 1
    assert tbl.count(1, 3) == 10
    assert tbl.count(2, 4) == 21
    assert tbl.count(3, 6) == 1485
    for n in range(7):
        for g in range(n // 2 + 1, n + 2):
            assert tbl.count(g, n) == 0


def test_determinism():
    assert count_by_genus(5) == count_by_genus(5)
    assert count_shapes(4) == count_shapes(4)


def test_joint_onechord_table_marginalizes():
    joint = count_by_genus_onechords(5)
    plain = count_by_genus(5)
    assert joint.genus_marginal().entries == plain.entries
    # n=1: the only diagram is a single 1-chord
    assert joint.count(0, 1, 1) == 1
    assert joint.count(0, 1, 0) == 0
    assert joint.total(1) == 1


def test_shape_counts_are_a_subtable():
    shapes = count_shapes(5)
    full = count_by_genus_onechords(5)
    assert shapes.count(0, 1, 1) == 1
    for key, v in shapes.entries.items():
        assert v <= full.entries.get(key, 0)
    # stacks of size two are not shapes: (1,4),(2,3) drops out at n=2
    assert shapes.count(0, 2) == full.count(0, 2) - 1


def test_macromolecular_counts():
    by_sigma = count_macromolecular_multi(8, (1, 2, 3))
    assert by_sigma[1].count(1, 4) == 1  # the bare crossing
    assert by_sigma[2].count(1, 8) == 1  # the doubled crossing
    assert by_sigma[2].count(1, 7) == 0
    for n in range(9):
        # the chordless diagram qualifies for every sigma
        assert by_sigma[3].count(0, n) >= 1
    # larger sigma only removes diagrams
    for key, v in by_sigma[3].entries.items():
        assert v <= by_sigma[2].entries.get(key, 0)
    for key, v in by_sigma[2].entries.items():
        assert v <= by_sigma[1].entries.get(key, 0)


def test_merge_and_validation():
    a = count_by_genus(3)
    b = count_by_genus(2)
    merged = a.merge(b)
    assert merged.count(0, 2) == a.count(0, 2) + b.count(0, 2)
    with pytest.raises(ValueError):
        a.merge(count_shapes(2))
    with pytest.raises(ValueError):
        count_macromolecular(3, 0)


def test_mm_single_sigma_matches_multi():
    multi = count_macromolecular_multi(7, (2,))[2]
    single = count_macromolecular(7, 2)
    assert single == multi
