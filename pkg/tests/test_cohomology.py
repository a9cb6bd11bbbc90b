import random
from fractions import Fraction

import pytest

from blowup.cohomology import (
    MonomialWindow,
    exact_sections,
    h0_basis,
    h0_window,
    h1_dimension,
    h1_stable,
    h1_window,
    lift_section,
)
from blowup.errors import StabilityViolation
from blowup.moduli import e, enumerate_monomials
from blowup.reference import ALL_ROWS
from blowup.ring import BundleSpec, Poly, VecSection, apply_transition
from blowup.selftest import spec_of
from oracles import h0_dim, h1_dim

WORKED = BundleSpec(2, Poly.monomial(1, 2))
ROW_SPECS = [pytest.param(spec_of(j, text), id=f"j{j}-{label}") for j, (label, text, _) in ALL_ROWS]


def _is_section(spec, s, n):
    t = apply_transition(spec, s, n)
    return all(k >= 0 for poly in s for (k, i) in poly.terms) and all(
        k <= i for poly in t for (k, i) in poly.terms
    )


def test_trivial_bundle_has_two_constant_sections():
    space = h0_basis(BundleSpec(0, Poly()), 0)
    assert space.dim == 2
    assert set(space.basis) == {VecSection.of(Poly.constant(1)), VecSection.of(None, Poly.constant(1))}


def test_basis_elements_are_sections():
    space = h0_basis(WORKED, 2)
    assert all(_is_section(WORKED, s, 2) for s in space.basis)


def test_basis_is_reduced_echelon():
    space = h0_basis(WORKED, 2)
    for t, lead in enumerate(space.leading):
        for u, s in enumerate(space.basis):
            assert s.to_vector().get(lead, 0) == (1 if t == u else 0)


@pytest.mark.parametrize("spec", ROW_SPECS)
def test_h0_dimension_matches_dense_oracle(spec):
    n = spec.default_order
    p = dict(spec.p.items())
    # the oracle uses a window twice as wide in z
    assert h0_basis(spec, n).dim == h0_dim(spec.j, p, n, extra=2 * spec.j)


@pytest.mark.parametrize("spec", ROW_SPECS)
@pytest.mark.parametrize("extra", [1, 2])
def test_windows_can_be_widened(spec, extra):
    n = spec.default_order
    assert h0_basis(spec, n, h0_window(spec.j, n).widened(extra)).dim == h0_basis(spec, n).dim
    wide = h1_dimension(spec, n, h1_window(spec.j, n).widened(extra))
    assert wide.dimension == h1_dimension(spec, n).dimension


def test_window_must_contain_default():
    with pytest.raises(ValueError):
        h0_basis(WORKED, 2, MonomialWindow(2, 0, 1, True))
    with pytest.raises(ValueError):
        h1_dimension(WORKED, 2, MonomialWindow(2, -2, -1))


@pytest.mark.parametrize("spec", [BundleSpec(3, e(3, 6)), BundleSpec(2, e(2, 1)), WORKED])
def test_h0_monotone_in_order(spec):
    dims = [h0_basis(spec, n).dim for n in range(0, 6)]
    assert dims == sorted(dims)


def test_worked_example_h1():
    res = h1_dimension(WORKED, 2)
    assert res.dimension == 1
    assert res.representatives == (VecSection.of(Poly.monomial(-1, 0)),)


@pytest.mark.parametrize(
    "spec, expected",
    [
        (BundleSpec(1, Poly()), 0),
        (BundleSpec(3, Poly()), 3),
        (BundleSpec(2, Poly.monomial(0, 1)), 1),
        (BundleSpec(3, Poly.monomial(0, 2)), 3),
        (BundleSpec(4, Poly()), 6),
    ],
)
def test_h1_known_values(spec, expected):
    assert h1_stable(spec).dimension == expected


@pytest.mark.parametrize("j", range(0, 7))
def test_split_h1_closed_form(j):
    assert h1_stable(BundleSpec(j, Poly())).dimension == j * (j - 1) // 2


@pytest.mark.parametrize("spec", ROW_SPECS)
def test_h1_matches_reduced_cochain_oracle(spec):
    n = spec.default_order
    assert h1_dimension(spec, n).dimension == h1_dim(spec.j, dict(spec.p.items()), n)


def test_h1_oracle_on_random_j4_bundles():
    rng = random.Random(3)
    mons = enumerate_monomials(4)
    for _ in range(15):
        picked = rng.sample(mons, rng.randint(1, 4))
        p = Poly({(m.l, m.i): Fraction(rng.randint(1, 9), rng.randint(1, 5)) for m in picked})
        spec = BundleSpec(4, p)
        assert h1_stable(spec).dimension == h1_dim(4, dict(p.items()), 6)


@pytest.mark.parametrize("spec", ROW_SPECS)
def test_h1_representatives_are_distinct_monomials(spec):
    n = spec.default_order
    res = h1_dimension(spec, n)
    assert len(res.representatives) == res.dimension
    assert len(set(res.representatives)) == res.dimension
    for rep in res.representatives:
        assert sum(len(poly) for poly in rep) == 1
        assert all(k < 0 for poly in rep for (k, _) in poly.terms)


@pytest.mark.parametrize("lam", [Fraction(2), Fraction(-1), Fraction(7, 3)])
@pytest.mark.parametrize("spec", ROW_SPECS[:8])
def test_scaling_leaves_dimensions(spec, lam):
    n = spec.default_order
    scaled = spec.scaled(lam)
    assert h0_basis(scaled, n).dim == h0_basis(spec, n).dim
    assert h1_dimension(scaled, n).dimension == h1_dimension(spec, n).dimension


def test_h1_stable_raises_on_unstable(monkeypatch):
    import blowup.cohomology as coh

    real = coh.h1_dimension

    def fake(spec, n=None, window=None):
        res = real(spec, n, window)
        return coh.H1Result(res.dimension + (n > spec.default_order), res.representatives, n, res.window)

    monkeypatch.setattr(coh, "h1_dimension", fake)
    with pytest.raises(StabilityViolation):
        coh.h1_stable(WORKED)


def test_lift_produces_exact_sections():
    spec = BundleSpec(4, e(4, 1, 20))
    space = h0_basis(spec, 6)
    for s in space.basis:
        lifted = lift_section(spec, s, 6)
        assert lifted is not None
        assert lifted.truncate(6) == s
        assert _is_section(spec, lifted, None)


def test_exact_sections_are_exact():
    for s in exact_sections(WORKED, 3):
        assert _is_section(WORKED, s, None)
