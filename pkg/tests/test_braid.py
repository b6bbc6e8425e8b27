import pytest
from hypothesis import given
from hypothesis import strategies as st

from quandlecolor.braid import (
    BraidParseError,
    BraidWord,
    act,
    act_evaluated,
    evaluate_image,
    format_braid,
    parse_braid,
    word,
)
from quandlecolor.quandle import make_q_n
from quandlecolor.terms import Generator, InvOp, Op, render
from strategies import SMALL_QUANDLES, braid_words

x1, x2, x3, x4 = (Generator(i) for i in range(1, 5))


def test_parse_fig_10_word():
    assert parse_braid("s2^-2 s1", 4).letters == ((2, -1), (2, -1), (1, 1))


def test_parse_empty_is_identity():
    assert parse_braid("", 4) == BraidWord(4, ())
    assert parse_braid("   ", 4).letters == ()


def test_parse_w3():
    assert parse_braid("s2^-2 s1 s2^2", 4).letters == ((2, -1), (2, -1), (1, 1), (2, 1), (2, 1))


def test_parse_exponent_forms():
    assert parse_braid("s1^0 s3^+2 s2^1", 4).letters == ((3, 1), (3, 1), (2, 1))


@pytest.mark.parametrize("text", ["s4", "s0", "t1", "s1^", "s1^a", "s 1", "s1^-1x"])
def test_parse_errors(text):
    with pytest.raises(BraidParseError):
        parse_braid(text, 4)


def test_braid_word_validates_letters():
    with pytest.raises(BraidParseError):
        BraidWord(3, ((3, 1),))
    with pytest.raises(BraidParseError):
        BraidWord(3, ((1, 2),))


@given(braid_words())
def test_format_parse_round_trip(w):
    assert parse_braid(format_braid(w), w.rank) == w


def test_act_fig_10():
    image = act(parse_braid("s2^-2 s1", 4))
    assert image.terms == (InvOp(x2, x1), Op(x1, x3), Op(x3, Op(x1, x3)), x4)
    assert render(image.terms[2]) == "(x3*(x1*x3))"


def test_act_identity():
    assert act(BraidWord(4)).terms == (x1, x2, x3, x4)


@pytest.mark.parametrize("n", [3, 4, 5, 9])
def test_act_evaluated_mixed_1_N_images(n):
    assert act_evaluated(parse_braid("s1 s2^-1", 4), (1, 1, n, n), make_q_n(n)) == (n, 1, 2, n)
    image = act(parse_braid("s1 s2^-1", 4))
    assert evaluate_image(image, (1, 1, n, n), make_q_n(n)) == (n, 1, 2, n)


def test_fusion_fig_10_on_table_1():
    w = parse_braid("s2^-2 s1", 4)
    q = make_q_n(4)
    assert act_evaluated(w, (1, 2, 3, 4), q) == evaluate_image(act(w), (1, 2, 3, 4), q)


def test_trivial_word_returns_assignment():
    assert act_evaluated(BraidWord(4), (4, 2, 3, 1), make_q_n(4)) == (4, 2, 3, 1)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_sigma2_power_period_from_1_N(n):
    q = make_q_n(n)
    period = 2 * (n - 1)
    for k in range(0, 3 * period):
        w = word(4, (2, -(k + 1)), (1, 1), (2, 2))
        v = act_evaluated(w, (1, 1, n, n), q)
        assert (v[0] == v[1]) == (k % period == (2 * n - 5) % period)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_sigma2_power_period_from_N_1(n):
    q = make_q_n(n)
    period = 2 * (n - 1)
    w6 = word(4, (2, -2), (3, 1), (2, 2))
    v = act_evaluated(w6, (n, n, 1, 1), q)
    assert v[0] == v[1]
    for k in range(0, 3 * period):
        w7 = word(4, (2, -(k + 1)), (3, 1), (2, 2))
        v = act_evaluated(w7, (n, n, 1, 1), q)
        assert (v[2] == v[3]) == (k % period == (2 * n - 5) % period)


@given(braid_words(max_len=12), st.sampled_from(SMALL_QUANDLES), st.data())
def test_equal_images_force_constant(w, q, data):
    # every assignment whose images all coincide is constant
    s = data.draw(st.integers(1, q.order))
    a = act_evaluated(w.inverse(), (s,) * w.rank, q)
    assert act_evaluated(w, a, q) == (s,) * w.rank
    assert a == (s,) * w.rank


def test_act_evaluated_errors():
    q = make_q_n(3)
    with pytest.raises(ValueError):
        act_evaluated(BraidWord(4), (1, 2, 3), q)
    with pytest.raises(ValueError):
        act_evaluated(BraidWord(2), (1, 4), q)


def test_word_concatenation_and_inverse():
    w = parse_braid("s1 s2^-1", 3)
    assert (w * w.inverse()).letters == ((1, 1), (2, -1), (2, 1), (1, -1))
    with pytest.raises(ValueError):
        w * BraidWord(4)


def test_kernel_arrays_are_in_application_order():
    gens, signs = parse_braid("s2^-1 s3 s1", 4).kernel_arrays()
    assert gens.tolist() == [0, 2, 1]
    assert signs.tolist() == [1, 1, -1]
