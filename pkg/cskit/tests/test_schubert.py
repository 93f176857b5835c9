import pytest

from cskit.errors import NotMinimalRep, ParseError, TypeMismatch
from cskit.services.schubert import (
    Polynomial,
    Tristate,
    contains_pattern,
    has_lmp_shape,
    is_palindromic,
    is_smooth,
    is_toric,
    parabolic_poincare,
    poincare,
    rationally_smooth,
)
from cskit.services.weyl import (
    enumerate_group,
    from_one_line,
    from_word,
    identity,
    inverse,
    left_multiply,
    longest_element,
    min_coset_rep,
)


def test_polynomial_arithmetic():
    p = Polynomial((1, 1))
    assert p * p == Polynomial((1, 2, 1))
    assert str(p * p) == "1 + 2q + q^2"
    assert str(Polynomial((1, 1, 2, 1))) == "1 + q + 2q^2 + q^3"
    assert Polynomial((1, 0, 0)).coeffs == (1,)
    assert Polynomial((1, 2, 1))(1) == 4
    assert Polynomial((1, 2, 1)).degree == 2
    assert str(Polynomial(())) == "0"
    with pytest.raises(ValueError):
        Polynomial((1, -1))


def test_poincare_polynomials(a2, a3, w4231):
    assert poincare(identity(a2)).coeffs == (1,)
    assert poincare(longest_element(a2, {1, 2})).coeffs == (1, 2, 2, 1)
    assert poincare(w4231).coeffs == (1, 3, 5, 6, 4, 1)
    assert poincare(longest_element(a3, {1, 2, 3}))(1) == 24


def test_parabolic_poincare_of_grassmannian_singular_point(a3, w4231):
    c = longest_element(a3, {1, 3}) * w4231
    rep = min_coset_rep(inverse(c), {1, 3})
    assert rep == from_one_line(a3, [2, 4, 1, 3])
    p = parabolic_poincare(rep, {1, 3})
    assert p.coeffs == (1, 1, 2, 1)
    assert not is_palindromic(p)


def test_parabolic_poincare_requires_min_rep(w4231):
    with pytest.raises(NotMinimalRep):
        parabolic_poincare(w4231, {1, 3})


def test_pattern_containment():
    assert contains_pattern((4, 2, 3, 1), (4, 2, 3, 1))
    assert contains_pattern((3, 1, 4, 2), (2, 1))
    assert not contains_pattern((1, 2, 3, 4), (2, 1))
    assert contains_pattern((5, 1, 3, 6, 2, 4), (3, 4, 1, 2))
    assert not contains_pattern((1, 2), (1, 2, 3))
    with pytest.raises(ParseError):
        contains_pattern((1, 1, 2), (1, 2))


def test_type_a_smoothness(a3, w4231):
    assert is_smooth(w4231) == Tristate.FALSE
    assert is_smooth(from_one_line(a3, [3, 4, 1, 2])) == Tristate.FALSE
    assert is_smooth(from_one_line(a3, [2, 4, 1, 3])) == Tristate.TRUE
    assert is_smooth(longest_element(a3, {1, 2, 3})) == Tristate.TRUE
    assert not rationally_smooth(w4231)


def test_smoothness_agrees_with_palindromes_in_type_a(a3):
    for w in enumerate_group(a3):
        assert is_smooth(w).as_bool() == rationally_smooth(w)


def test_simply_laced_and_other_types(b2, d4):
    assert is_smooth(longest_element(d4, d4.generators)) == Tristate.TRUE
    assert is_smooth(longest_element(b2, {1, 2})) == Tristate.UNKNOWN
    assert not Tristate.UNKNOWN.decided
    assert Tristate.UNKNOWN.as_bool() is None
    assert Tristate.of(False).as_bool() is False


def test_toric(a3):
    assert is_toric(from_word(a3, [1, 3]))
    assert not is_toric(from_word(a3, [1, 2, 1]))


def test_lmp_shape(a3, a4, b2):
    w = from_one_line(a3, [3, 4, 1, 2])
    j = has_lmp_shape(w)
    assert j == 1
    assert from_word(a3, [2, 1, 3, 2]) == w
    assert has_lmp_shape(identity(a3)) is None
    assert has_lmp_shape(from_word(a4, [2, 1, 3, 2, 4])) == 1
    assert has_lmp_shape(from_word(a4, [2, 1, 3, 2, 1])) is None
    # removing the first occurrence of s_{j+1} leaves a toric element
    assert is_toric(left_multiply(j + 1, w))
    with pytest.raises(TypeMismatch):
        has_lmp_shape(identity(b2))
