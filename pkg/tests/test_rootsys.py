from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from wondermono.rootsys import (
    RootSystemError,
    add_weights,
    build,
    coroot_pairing,
    dominance_diff,
    dominant_below,
    from_name,
    is_dominant,
    root_combination,
    sub_weights,
    support,
)

VALID = [
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 2), ("C", 3), ("C", 4),
    ("D", 4), ("F", 4), ("G", 2),
]

INVALID = [("A", 0), ("A", 5), ("B", 1), ("C", 1), ("D", 2), ("D", 3), ("D", 5), ("E", 6), ("F", 3), ("G", 3), ("H", 2)]


def test_valid_ranks_build():
    for letter, rank in VALID:
        rs = build(letter, rank)
        assert rs.name == f"{letter}{rank}"
        assert len(rs.cartan) == rank


def test_invalid_ranks_rejected():
    for letter, rank in INVALID:
        with pytest.raises(RootSystemError):
            build(letter, rank)


def test_from_name():
    assert from_name("g2").name == "G2"
    with pytest.raises(RootSystemError):
        from_name("A")
    with pytest.raises(RootSystemError):
        from_name("2A")


def test_cartan_matrices():
    assert build("A", 2).cartan == ((2, -1), (-1, 2))
    assert build("B", 2).cartan == ((2, -1), (-2, 2))
    assert build("C", 2).cartan == ((2, -2), (-1, 2))
    assert build("G", 2).cartan == ((2, -3), (-1, 2))
    assert build("B", 3).cartan == ((2, -1, 0), (-1, 2, -1), (0, -2, 2))
    assert build("C", 3).cartan == ((2, -1, 0), (-1, 2, -2), (0, -1, 2))
    assert build("F", 4).cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    )
    assert build("D", 4).cartan == (
        (2, -1, 0, 0),
        (-1, 2, -1, -1),
        (0, -1, 2, 0),
        (0, -1, 0, 2),
    )


def test_symmetrizer():
    assert build("A", 3).symmetrizer == (1, 1, 1)
    assert build("B", 2).symmetrizer == (2, 1)
    assert build("C", 2).symmetrizer == (1, 2)
    assert build("G", 2).symmetrizer == (1, 3)
    assert build("B", 3).symmetrizer == (2, 2, 1)
    assert build("C", 3).symmetrizer == (1, 1, 2)


def test_symmetrizer_symmetrizes():
    for letter, rank in VALID:
        rs = build(letter, rank)
        d = rs.symmetrizer
        for i in range(rank):
            for j in range(rank):
                assert d[i] * rs.cartan[i][j] == d[j] * rs.cartan[j][i]


def test_positive_root_counts():
    expected = {
        ("A", 1): 1, ("A", 2): 3, ("A", 3): 6, ("A", 4): 10,
        ("B", 2): 4, ("B", 3): 9, ("B", 4): 16,
        ("C", 2): 4, ("C", 3): 9, ("C", 4): 16,
        ("D", 4): 12, ("F", 4): 24, ("G", 2): 6,
    }
    for key, count in expected.items():
        rs = build(*key)
        assert len(rs.positive_roots) == count
        assert len(rs.roots) == 2 * count


def test_highest_root_g2():
    rs = build("G", 2)
    assert rs.positive_roots == ((0, 1), (1, 0), (1, 1), (2, 1), (3, 1), (3, 2))
    assert (2, 2) not in rs.positive_roots


def test_inverse_cartan():
    for letter, rank in VALID:
        rs = build(letter, rank)
        for i in range(rank):
            for j in range(rank):
                entry = sum(Fraction(rs.cartan[i][k]) * rs.inverse_cartan[k][j] for k in range(rank))
                assert entry == (1 if i == j else 0)
                assert rs.inverse_cartan[i][j] >= 0


def test_simple_roots_and_rho():
    rs = build("B", 2)
    assert rs.simple_root(1) == (2, -2)
    assert rs.simple_root(2) == (-1, 2)
    assert rs.rho() == (1, 1)
    with pytest.raises(ValueError):
        rs.simple_root(3)


def test_weight_arithmetic():
    assert add_weights((1, 2), (3, -1)) == (4, 1)
    assert sub_weights((1, 2), (3, -1)) == (-2, 3)
    assert is_dominant((0, 0))
    assert not is_dominant((1, -1))


def test_support():
    assert support((0, 2, 0)) == frozenset({2})
    assert support((1, 0, 3)) == frozenset({1, 3})
    assert support((0,)) == frozenset()


def test_root_combination():
    rs = build("A", 2)
    assert root_combination(rs, (1, 0)) == (2, -1)
    assert root_combination(rs, (1, 1)) == (1, 1)


def test_dominance_diff():
    rs = build("A", 2)
    assert dominance_diff(rs, (1, 1), (0, 0)) == (1, 1)
    assert dominance_diff(rs, (1, 1), (1, 1)) == (0, 0)
    assert dominance_diff(rs, (0, 0), (1, 1)) is None
    assert dominance_diff(rs, (1, 0), (0, 1)) is None


def test_dominant_below_frozen():
    rs = build("A", 1)
    assert dominant_below(rs, (2,)) == [((2,), (0,)), ((0,), (1,))]
    rs2 = build("A", 2)
    assert dominant_below(rs2, (1, 1)) == [((1, 1), (0, 0)), ((0, 0), (1, 1))]
    assert dominant_below(rs2, (1, 0)) == [((1, 0), (0, 0))]


def test_dominant_below_ordering_and_consistency():
    for name, lam in [("B2", (2, 2)), ("G2", (1, 1)), ("A3", (1, 0, 1))]:
        rs = from_name(name)
        entries = dominant_below(rs, lam)
        vectors = [nvec for _, nvec in entries]
        assert vectors == sorted(vectors)
        assert len(set(vectors)) == len(vectors)
        for mu, nvec in entries:
            assert is_dominant(mu)
            assert sub_weights(lam, mu) == root_combination(rs, nvec)


def test_coroot_pairing():
    rs = build("G", 2)
    # pairing against a simple coroot reads off the fundamental coordinate
    for lam in [(1, 0), (0, 1), (2, 3)]:
        assert coroot_pairing(rs, lam, (1, 0)) == lam[0]
        assert coroot_pairing(rs, lam, (0, 1)) == lam[1]
    # highest root of G2 is long, its coroot is a short coroot combination
    assert coroot_pairing(rs, (1, 0), (3, 2)) == 1
    assert coroot_pairing(rs, (0, 1), (3, 2)) == 2


@given(st.sampled_from(["A2", "B2", "C2", "G2", "A3"]), st.data())
def test_dominance_diff_roundtrip(name, data):
    rs = from_name(name)
    nvec = tuple(data.draw(st.integers(0, 3)) for _ in range(rs.rank))
    mu = tuple(data.draw(st.integers(0, 2)) for _ in range(rs.rank))
    lam = add_weights(mu, root_combination(rs, nvec))
    assert dominance_diff(rs, lam, mu) == nvec
