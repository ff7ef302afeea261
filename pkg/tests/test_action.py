import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl3hecke.action import (
    BasisFunction,
    ModuleVector,
    OperationUndefined,
    WeightConfig,
    act_gamma_left,
    act_regular_generator,
    act_T_gamma,
    act_T_omega1,
    act_T_omega1_t01m,
    act_T_omega1_t10,
    act_word,
    basis,
    composite_table,
    format_vector,
    parse_basis,
)
from gl3hecke.hecke import TT11, TTM1M1, TTM10, CharacterCase, parse_word
from gl3hecke.lattice import ID3, W1, W2, W2SQ, W2W1, classify, s_omega_contains

IW, SR, RG = CharacterCase.IWAHORI, CharacterCase.SEMIREGULAR, CharacterCase.REGULAR
P = 5


def vec(w, a, coeff=1):
    return ModuleVector.of(BasisFunction(w, a), P, coeff)


def cfg(case, c=0):
    return WeightConfig.make(case, P, c)


points = st.tuples(st.integers(-8, 8), st.integers(-8, 8))
id_points = points.filter(lambda a: s_omega_contains(ID3, a))


def test_gamma_left():
    assert act_gamma_left(BasisFunction(ID3, (-2, -1))) == BasisFunction(W2SQ, (2, 3))
    assert act_gamma_left(BasisFunction(ID3, (0, 0))) == BasisFunction(W2SQ, (1, 1))


@given(points)
def test_gamma_left_cubes_to_identity(a):
    f = BasisFunction(classify(a), a)
    assert act_gamma_left(act_gamma_left(act_gamma_left(f))) == f


def test_T_gamma():
    assert act_T_gamma(vec(ID3, (-2, -1)), cfg(IW)) == vec(W2, (2, -1))
    assert act_T_gamma(vec(ID3, (0, 0)), cfg(IW)) == vec(W2, (1, 0))
    with pytest.raises(OperationUndefined):
        act_T_gamma(vec(ID3, (0, 0)), cfg(RG))


@given(points)
def test_T_gamma_cubed(a):
    v = vec(classify(a), a)
    c = cfg(IW)
    assert act_T_gamma(act_T_gamma(act_T_gamma(v, c), c), c) == v


def test_T_omega1():
    assert act_T_omega1(vec(W2, (2, -1)), cfg(IW)) == vec(W2W1, (-1, 2))
    assert act_T_omega1(vec(ID3, (-2, -1)), cfg(IW)) == vec(ID3, (-2, -1), -1)
    assert not act_T_omega1(vec(ID3, (-1, -1)), cfg(IW, 0))
    assert act_T_omega1(vec(ID3, (-1, -1)), cfg(IW, -1)) == vec(ID3, (-1, -1), -1)
    with pytest.raises(OperationUndefined):
        act_T_omega1(vec(ID3, (0, 0)), cfg(RG))


def test_semiregular_generators():
    c = cfg(SR)
    assert act_T_omega1_t01m(vec(ID3, (-2, -1)), c) == vec(W1, (-1, -3))
    assert act_T_omega1_t01m(vec(W1, (-1, -3)), c) == vec(ID3, (-3, -2))
    three = vec(ID3, (-2, -1)) + vec(ID3, (0, 0), 2) + vec(W1, (0, -1), 3)
    assert not act_T_omega1_t10(three, c)
    assert not act_T_omega1_t10(ModuleVector(P), c)
    with pytest.raises(OperationUndefined):
        act_T_omega1_t01m(vec(ID3, (0, 0)), cfg(IW))


@given(id_points)
def test_semiregular_square_translates(a):
    c = cfg(SR)
    v = vec(ID3, a)
    assert act_T_omega1_t01m(act_T_omega1_t01m(v, c), c) == vec(ID3, (a[0] - 1, a[1] - 1))


def test_regular_generators():
    c = cfg(RG)
    assert act_regular_generator(TTM10, vec(ID3, (-2, -1)), c) == vec(ID3, (-3, -1))
    assert act_regular_generator(TTM1M1, vec(ID3, (0, 0)), c) == vec(ID3, (-1, -1))
    assert not act_regular_generator(TT11, vec(ID3, (-2, -1)), c)
    with pytest.raises(OperationUndefined):
        act_regular_generator(TTM10, vec(ID3, (0, 0)), cfg(SR))


@given(id_points)
def test_iwahori_words(a):
    c = cfg(IW)
    v = vec(ID3, a)
    assert act_word(parse_word("Tg Tw1 Tg Tw1", IW), v, c) == vec(ID3, (a[0] - 1, a[1]))
    assert act_word(parse_word("Tg Tw1 Tg Tg Tw1 Tg", IW), v, c) == vec(ID3, (a[0] - 1, a[1] - 1))
    assert act_word(parse_word("", IW), v, c) == v


def test_composite_table():
    (w1, d1), (w2, d2) = composite_table(ID3)
    assert (str(w1), d1) == ("Tg Tw1 Tg Tw1", (-1, 0))
    assert (str(w2), d2) == ("Tg Tw1 Tg Tg Tw1 Tg", (-1, -1))
    assert [d for _, d in composite_table(W2W1)] == [(-1, 0), (0, 1)]
    assert [d for _, d in composite_table(W2SQ)] == [(0, 1), (1, 1)]
    with pytest.raises(KeyError):
        composite_table("nowhere")


@pytest.mark.parametrize("c", [0, -1])
def test_composites_on_window(c):
    conf = cfg(IW, c)
    for a in itertools.product(range(-5, 6), repeat=2):
        w = classify(a)
        for word, (d1, d2) in composite_table(w):
            assert act_word(word, vec(w, a), conf) == vec(w, (a[0] + d1, a[1] + d2))


def test_word_case_mismatch():
    with pytest.raises(OperationUndefined):
        act_word(parse_word("Tw1", SR), vec(ID3, (0, 0)), cfg(IW))


def test_basis_and_format():
    assert parse_basis("Id:-2,-1") == BasisFunction(ID3, (-2, -1))
    assert parse_basis("123:-2,-1") == parse_basis("-2,-1")
    with pytest.raises(ValueError):
        basis((1, 0), ID3)
    v = vec(ID3, (-3, -1)) + vec(ID3, (-2, -1), 4)
    assert format_vector(v) == "1*f[123;-3,-1] + 4*f[123;-2,-1]"
    assert format_vector(ModuleVector(P)) == "0"


def test_weight_config_validation():
    with pytest.raises(ValueError):
        WeightConfig.make(IW, 5, 2)
    assert WeightConfig.make(IW, 5, -1).c_value == -1
    assert WeightConfig.make(RG, 5, -1).c_map == ()
