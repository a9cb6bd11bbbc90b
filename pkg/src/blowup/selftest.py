"""Regression checks against known values and structural properties."""

from __future__ import annotations

import random
from fractions import Fraction

from .cohomology import h0_window, h1_dimension, h1_window
from .invariants import compute_invariants, lq_pipeline
from .localmodule import TruncationParams, is_dual_element, relations_hold_exactly
from .moduli import closed_form_generic, closed_form_split
from .polyexpr import parse_poly
from .reference import (
    ALL_ROWS,
    WORKED_EXAMPLE,
    WORKED_EXAMPLE_DUAL,
    WORKED_EXAMPLE_DUAL_RELATION,
    WORKED_EXAMPLE_SIGNS,
)
from .ring import BundleSpec, Poly


def spec_of(j, text):
    return BundleSpec(j, parse_poly(text, j))


def check_rows(compute=compute_invariants):
    failures = []
    for j, (label, text, expected) in ALL_ROWS:
        got = compute(spec_of(j, text)).triple
        if got != expected:
            failures.append(f"j={j} row {label}: expected {expected}, computed {got}")
    return len(ALL_ROWS), failures


def transported_dual(m):
    """The three tabulated dual functionals as value tuples on m's generators."""
    out = {}
    for name, values in WORKED_EXAMPLE_DUAL.items():
        out[name] = tuple(
            Poly(values.get(lab, {})) * WORKED_EXAMPLE_SIGNS.get(lab, 1) for lab in m.gen_labels
        )
    return out


def check_worked_example():
    ex = WORKED_EXAMPLE
    spec = spec_of(ex["j"], ex["poly"])
    pipe = lq_pipeline(spec)
    m = pipe.module
    failures = []

    def expect(what, want, got):
        if want != got:
            failures.append(f"worked example {what}: expected {want}, computed {got}")

    expect("generators", ex["generators"], m.gen_count)
    expect("relations", ex["relations"], len(m.relations))
    if not relations_hold_exactly(m):
        failures.append("worked example: relations do not annihilate the lifted generators")
    expect("bidual rank", ex["bidual_rank"], pipe.bidual.gen_count)
    expect("l(Q)", ex["lQ"], pipe.length)
    expect("dim H^1", ex["h1"], h1_dimension(spec).dimension)

    funcs = transported_dual(m)
    for name, phi in funcs.items():
        if not is_dual_element(m, phi):
            failures.append(f"worked example: functional {name} does not kill the relations")
    total = [Poly() for _ in m.gen_labels]
    for name, coef in WORKED_EXAMPLE_DUAL_RELATION.items():
        total = [t + Poly(coef) * f for t, f in zip(total, funcs[name])]
    if any(total):
        failures.append("worked example: dual relation does not hold")
    # the computed dual generators lie in the span of the tabulated ones
    span = {funcs["A"], funcs["C"]}
    if set(pipe.dual.elements) - span:
        failures.append("worked example: computed dual generators differ from A, C")
    return failures


def check_closed_forms(max_j=5):
    failures = []
    for j in range(0, max_j + 1):
        want = closed_form_split(j)
        got = compute_invariants(BundleSpec(j, Poly())).triple
        if got != want + (sum(want),):
            failures.append(f"split j={j}: expected {want}, computed {got}")
        if j >= 2:
            want = closed_form_generic(j)
            got = compute_invariants(BundleSpec(j, Poly.monomial(0, 1))).triple
            if got != want + (sum(want),):
                failures.append(f"generic j={j}: expected {want}, computed {got}")
    return failures


def check_scaling(lams=(Fraction(2), Fraction(-1), Fraction(7, 3))):
    failures = []
    for j, (label, text, expected) in ALL_ROWS:
        spec = spec_of(j, text)
        for lam in lams:
            got = compute_invariants(spec.scaled(lam)).triple
            if got != expected:
                failures.append(f"j={j} row {label} scaled by {lam}: computed {got}")
    return failures


def random_coefficient(rng):
    while True:
        c = Fraction(rng.randint(-60, 60), rng.randint(1, 30))
        if c:
            return c


def check_zero_pattern(supports, draws, seed=0):
    """Random nonzero coefficients on a fixed support give one report.

    ``supports`` is a list of (j, Poly with the wanted support).
    """
    rng = random.Random(seed)
    failures = []
    for j, base in supports:
        want = compute_invariants(BundleSpec(j, base)).triple
        for _ in range(draws):
            p = Poly({key: random_coefficient(rng) for key in base.terms})
            got = compute_invariants(BundleSpec(j, p)).triple
            if got != want:
                failures.append(f"j={j} support {sorted(base.terms)}: {p!r} gave {got}, unit coefficients {want}")
                break
    return failures


def check_widening(extras=(1, 2)):
    failures = []
    for j, (label, text, expected) in ALL_ROWS:
        spec = spec_of(j, text)
        n = spec.default_order
        base = TruncationParams.for_j(j)
        for extra in extras:
            rep = compute_invariants(
                spec,
                base.widened(extra),
                h0_window=h0_window(j, n).widened(extra),
                h1_window=h1_window(j, n).widened(extra),
            )
            if rep.triple != expected:
                failures.append(f"j={j} row {label} widened by {extra}: computed {rep.triple}")
    return failures
