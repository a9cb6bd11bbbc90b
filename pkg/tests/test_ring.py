from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blowup.errors import NormalFormError
from blowup.ring import (
    BundleSpec,
    ChartMonomial,
    Poly,
    VecSection,
    act_x,
    act_y,
    apply_inverse_transition,
    apply_transition,
    as_scalar,
    is_v_holomorphic,
    to_v_chart,
    validate_normal_form,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
keys = st.tuples(st.integers(-4, 4), st.integers(0, 4))
polys = st.dictionaries(keys, rationals, max_size=6).map(Poly)
sections = st.tuples(polys, polys).map(lambda t: VecSection(*t))


def naive_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            key = (ka[0] + kb[0], ka[1] + kb[1])
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize(
    "k, i, expected",
    [(0, 0, (0, 0)), (1, 2, (1, 2)), (-1, 1, (2, 1))],
)
def test_to_v_chart(k, i, expected):
    assert to_v_chart(ChartMonomial(k, i)) == expected


@pytest.mark.parametrize("k, i, expected", [(0, 0, True), (1, 0, False), (1, 2, True)])
def test_is_v_holomorphic(k, i, expected):
    assert is_v_holomorphic(ChartMonomial(k, i)) is expected


def test_transition_of_constant_second_component():
    spec = BundleSpec(2, Poly.monomial(1, 2))
    out = apply_transition(spec, VecSection.of(None, Poly.constant(1)), 2)
    assert out == VecSection(Poly.monomial(1, 2), Poly.monomial(-2, 0))


def test_transition_truncates():
    spec = BundleSpec(2, Poly.monomial(1, 2))
    out = apply_transition(spec, VecSection.of(None, Poly.monomial(0, 2)), 2)
    assert out == VecSection(Poly(), Poly.monomial(-2, 2))


@given(sections)
def test_transition_is_identity_for_j0(s):
    spec = BundleSpec(0, Poly())
    assert apply_transition(spec, s, 3) == s.truncate(3)


def test_actions_on_small_sections():
    beta1 = VecSection.of(None, Poly.monomial(1, 0))
    beta0 = VecSection.of(None, Poly.constant(1))
    assert act_x(beta1, 2) == VecSection.of(None, Poly.monomial(1, 1))
    assert act_y(beta0, 2) == VecSection.of(None, Poly.monomial(1, 1))
    assert act_x(VecSection.of(Poly.monomial(0, 2)), 2).is_zero()


@pytest.mark.parametrize(
    "j, p, bad",
    [
        (2, Poly({(0, 1): 1, (1, 1): 1, (1, 2): 1}), []),
        (1, Poly(), []),
        (2, Poly.monomial(2, 1), [ChartMonomial(2, 1)]),
    ],
)
def test_validate_normal_form(j, p, bad):
    assert validate_normal_form(j, p) == bad


def test_bundle_spec_rejects_out_of_window():
    with pytest.raises(NormalFormError) as info:
        BundleSpec(2, Poly.monomial(2, 1))
    assert "(k=2,i=1)" in str(info.value)
    with pytest.raises(NormalFormError):
        BundleSpec(1, Poly.monomial(0, 1))


@pytest.mark.parametrize("value", [0.5, 1 + 2j, True])
def test_inexact_scalars_rejected(value):
    with pytest.raises(TypeError):
        as_scalar(value)
    with pytest.raises(TypeError):
        Poly({(0, 1): value})


def test_poly_stores_no_zeros_and_reduces():
    p = Poly({(0, 1): Fraction(2, 4), (1, 1): 0})
    assert dict(p.items()) == {(0, 1): Fraction(1, 2)}
    assert (p - p) == Poly() and not (p - p)


@settings(max_examples=100)
@given(polys, polys)
def test_arithmetic_matches_naive_oracle(a, b):
    assert dict((a * b).items()) == naive_mul(a, b)
    summed = {}
    for k, v in list(a.items()) + list(b.items()):
        summed[k] = summed.get(k, 0) + v
    assert dict((a + b).items()) == {k: v for k, v in summed.items() if v}


@given(keys, keys)
def test_chart_change_is_multiplicative(m1, m2):
    a, b = ChartMonomial(*m1), ChartMonomial(*m2)
    prod = ChartMonomial(a.k + b.k, a.i + b.i)
    va, vb = to_v_chart(a), to_v_chart(b)
    assert to_v_chart(prod) == (va[0] + vb[0], va[1] + vb[1])


@given(sections, st.integers(0, 6))
def test_actions_commute(s, n):
    assert act_x(act_y(s, n), n) == act_y(act_x(s, n), n)


@given(sections, sections, rationals, st.integers(0, 5))
def test_transition_is_linear(s, t, c, n):
    spec = BundleSpec(3, Poly({(-1, 1): 2, (2, 4): Fraction(-1, 3)}))
    lhs = apply_transition(spec, s + t.scale(c), n)
    rhs = apply_transition(spec, s, n) + apply_transition(spec, t, n).scale(c)
    assert lhs == rhs


@given(sections)
def test_inverse_transition_undoes_transition(s):
    spec = BundleSpec(2, Poly({(0, 1): 1, (1, 2): 3}))
    assert apply_inverse_transition(spec, apply_transition(spec, s)) == s
