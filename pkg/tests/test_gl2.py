import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperop.genwords import eval_tokens
from hyperop.gl2 import (
    GL_ORDERS,
    GL_REPS,
    I,
    MINUS_I,
    PGL_ORDERS,
    PGL_REPS,
    T,
    X,
    XT,
    Y,
    Y2,
    InvalidElement,
    Mat2,
    classify_gl,
    classify_pgl,
    mat_mul,
    mat_pow,
    parse_matrix,
)

from _util import GL_TOKENS

unit = st.lists(st.sampled_from(GL_TOKENS), max_size=30).map(eval_tokens)


def test_products():
    assert mat_mul(X, X) == MINUS_I
    assert mat_mul(X, T) == Mat2(-1, 0, 0, 1) == XT
    assert mat_mul(Y, Y) == Y2
    A = Mat2(-2, -3, 1, 2)
    assert mat_mul(A, I) == A == mat_mul(I, A)


def test_relations():
    assert mat_pow(X, 2) == mat_pow(Y, 3) == MINUS_I
    for A in (mat_pow(X, 4), mat_mul(T, T), mat_pow(XT, 2), mat_pow(mat_mul(Y, T), 2)):
        assert A == I


@pytest.mark.parametrize("name", list(GL_REPS))
def test_gl_representatives(name):
    lab = classify_gl(GL_REPS[name])
    assert lab.name == name and lab.order == GL_ORDERS[name]


@pytest.mark.parametrize("name", list(PGL_REPS))
def test_pgl_representatives(name):
    lab = classify_pgl(PGL_REPS[name])
    assert lab.name == name and lab.order == PGL_ORDERS[name]


def test_examples():
    assert (classify_gl(Mat2(-1, -1, 1, 0)).name, classify_gl(Mat2(-1, -1, 1, 0)).order) == ("Y2", 3)
    assert classify_gl(Mat2(-2, -3, 1, 2)).name == "T"
    assert classify_gl(Mat2(1, 1, 0, 1)).order is None
    assert str(classify_gl(Mat2(1, 1, 0, 1))) == "class=infinite order=infinite"
    assert classify_pgl(Y).name == "y" and classify_pgl(Y).order == 3
    assert classify_pgl(MINUS_I).order == 1
    assert classify_pgl(Mat2(-1, 0, 0, 1)).name == "xt"


def test_unipotent_never_periodic():
    U = Mat2(1, 1, 0, 1)
    assert all(mat_pow(U, k) not in (I, MINUS_I) for k in range(1, 13))


def test_invalid_determinant():
    with pytest.raises(InvalidElement):
        classify_gl(Mat2(2, 0, 0, 1))
    with pytest.raises(InvalidElement):
        classify_pgl(Mat2(1, 1, 1, 1))


def test_overflow_is_reported():
    big = Mat2(2**62, 0, 0, 1)
    with pytest.raises(OverflowError):
        mat_mul(big, Mat2(4, 0, 0, 1))


def test_parse_matrix():
    assert parse_matrix("-2,-3;1,2") == Mat2(-2, -3, 1, 2)
    assert parse_matrix(" 1, 0 ; 0, 1 ") == I
    for bad in ("1,2,3;4", "a,b;c,d", "1,0"):
        with pytest.raises(ValueError):
            parse_matrix(bad)


def test_random_conjugates_keep_class():
    rng = random.Random(7)
    for name, A in GL_REPS.items():
        for _ in range(300):
            W = eval_tokens(rng.choice(GL_TOKENS) for _ in range(rng.randint(0, 14)))
            assert classify_gl(W @ A @ W.inverse()).name == name


def _divides(p, q):
    """Whether the monic quadratic ``p`` divides integer polynomial ``q`` (coeffs high to low)."""
    q = list(q)
    while len(q) >= len(p):
        c = q[0]
        for i in range(len(p)):
            q[i] -= c * p[i]
        q.pop(0)
    return all(v == 0 for v in q)


@pytest.mark.parametrize("name", ["T", "XT", "Y2", "X", "Y"])
def test_characteristic_polynomial_roots_of_unity(name):
    A = GL_REPS[name]
    m = GL_ORDERS[name]
    charpoly = [1, -A.trace, A.det]
    xm = lambda k: [1] + [0] * (k - 1) + [-1]
    assert _divides(charpoly, xm(m))
    assert not any(_divides(charpoly, xm(j)) for j in range(1, m))


@given(unit)
def test_order_is_minimal(A):
    for lab, target in ((classify_gl(A), (I,)), (classify_pgl(A), (I, MINUS_I))):
        if lab.order is None:
            continue
        assert mat_pow(A, lab.order) in target
        assert all(mat_pow(A, j) not in target for j in range(1, lab.order))


@given(unit)
def test_pgl_ignores_sign(A):
    assert classify_pgl(A) == classify_pgl(-A)


@given(unit, unit)
def test_determinant_multiplicative(A, B):
    assert (A @ B).det == A.det * B.det
