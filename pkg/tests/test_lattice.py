import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl3hecke.lattice import (
    ID3,
    W1,
    W1W2,
    W2,
    W2SQ,
    W2W1,
    WindowSpec,
    classify,
    entry_exponent,
    exponent_matrix,
    identity,
    is_proper,
    omega1,
    omega2,
    parse_weyl,
    partition_window,
    s_omega_contains,
    weyl_group,
)

coord = st.integers(-12, 12)
vec2 = st.tuples(coord, coord)


# explicit descriptions of the six N = 3 regions
REGIONS = {
    ID3: lambda a1, a2: a1 <= a2 <= 0,
    W1: lambda a1, a2: a2 + 1 <= a1 <= 0,
    W2: lambda a1, a2: a1 >= 1 and a2 <= 0,
    W1W2: lambda a1, a2: a1 >= a2 + 1 >= 2,
    W2W1: lambda a1, a2: a1 <= 0 and a2 >= 1,
    W2SQ: lambda a1, a2: a2 >= a1 >= 1,
}


def test_named_elements():
    assert W1.perm == (2, 1, 3)
    assert W2.perm == (3, 1, 2)
    assert W2 ** 3 == ID3
    assert W1 * W2 == W1W2 and W2 * W1 == W2W1 and W2 * W2 == W2SQ
    assert parse_weyl("w2^2") == W2SQ and parse_weyl("132") == W2W1


def test_matrix_product_is_composition():
    for x, y in itertools.product(weyl_group(3), repeat=2):
        mx, my, mxy = x.matrix(), y.matrix(), (x * y).matrix()
        prod = [[sum(mx[i][k] * my[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
        assert prod == [list(r) for r in mxy]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_group_generated(n):
    assert len(weyl_group(n)) == len(set(weyl_group(n)))
    assert omega1(n) ** 2 == identity(n)
    assert omega2(n) ** n == identity(n)


def test_entry_exponent_examples():
    assert entry_exponent(ID3, (-2, -1), 2, 1) == 2
    assert entry_exponent(W1, (0, -1), 2, 1) == 1
    for i, j in itertools.permutations(range(1, 4), 2):
        assert entry_exponent(ID3, (0, 0), i, j) == (1 if i > j else 0)


@pytest.mark.parametrize("i,j", [(1, 1), (0, 2), (1, 4)])
def test_entry_exponent_rejects_bad_indices(i, j):
    with pytest.raises(ValueError):
        entry_exponent(ID3, (0, 0), i, j)


@given(vec2)
def test_antisymmetry(a):
    for w in weyl_group(3):
        for i, j in itertools.permutations(range(1, 4), 2):
            assert entry_exponent(w, a, i, j) + entry_exponent(w, a, j, i) == 1


@given(st.tuples(*[st.integers(-6, 6)] * 3))
def test_exponent_matrix_matches_entries(a):
    for w in weyl_group(4):
        m = exponent_matrix(w, a)
        for i, j in itertools.permutations(range(1, 5), 2):
            assert m[i - 1][j - 1] == entry_exponent(w, a, i, j)


def test_s_omega_examples():
    assert s_omega_contains(ID3, (-2, -1))
    assert s_omega_contains(W2, (2, -1))
    assert not s_omega_contains(ID3, (1, 0))


def test_classify_examples():
    assert classify((0, 0)) == ID3
    assert classify((2, 1)) == W1W2
    assert classify((1, 2)) == W2SQ
    # ties resolve without breaking the partition
    assert classify((1, 0)) == W2


@given(vec2)
def test_regions_match_inequalities(a):
    hits = [w for w, ok in REGIONS.items() if ok(*a)]
    assert hits == [w for w in weyl_group(3) if s_omega_contains(w, a)]
    assert hits == [classify(a)]


@given(st.tuples(*[st.integers(-5, 5)] * 3))
def test_classify_lands_in_region_rank4(a):
    w = classify(a)
    assert s_omega_contains(w, a)
    assert sum(s_omega_contains(x, a) for x in weyl_group(4)) == 1


@pytest.mark.parametrize("bound,rank,points,classes", [(5, 3, 121, 6), (3, 4, 343, 24), (0, 3, 1, 1)])
def test_partition_window(bound, rank, points, classes):
    part = partition_window(WindowSpec(bound, rank), rank)
    assert part.ok
    assert len(part.assignment) == points
    assert len(part.class_sizes()) == classes


def test_partition_origin():
    assert partition_window(WindowSpec(1)).assignment[(0, 0)] == ID3


def test_is_proper_examples():
    assert is_proper(ID3, (-3, -2), (-1, 0))
    assert is_proper(ID3, (-2, -1), (-2, -1))
    assert not is_proper(ID3, (-1, -1), (-2, -1))
    with pytest.raises(ValueError):
        is_proper(ID3, (1, 0), (0, 0))


@given(vec2, vec2)
def test_is_proper_identity_region(a, b):
    if not (s_omega_contains(ID3, a) and s_omega_contains(ID3, b)):
        return
    expected = b[0] <= a[0] and b[1] <= a[1] and b[1] - b[0] >= a[1] - a[0]
    assert is_proper(ID3, b, a) == expected


@given(vec2, vec2, vec2)
def test_is_proper_transitive(a, b, c):
    w = classify(a)
    if not (s_omega_contains(w, b) and s_omega_contains(w, c)):
        return
    if is_proper(w, b, a) and is_proper(w, c, b):
        assert is_proper(w, c, a)
