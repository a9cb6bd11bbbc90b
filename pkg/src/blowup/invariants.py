"""The pipeline (j, p) -> (l(Q), l(R^1 pi_* V), charge)."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .cohomology import h0_basis, h1_dimension, h1_stable
from .localmodule import (
    TruncationParams,
    bidual_and_evaluation,
    cokernel_length,
    dual,
    module_from_sections,
)
from .moduli import closed_form_generic, closed_form_split, e, enumerate_monomials, stratum_by_invariants
from .ring import BundleSpec, Poly


@dataclass(frozen=True)
class InvariantReport:
    j: int
    p: Poly
    lQ: int
    lR1: int
    charge: int
    generic: bool
    split: bool
    bounds_ok: bool
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def pair(self):
        return (self.lQ, self.lR1)

    @property
    def triple(self):
        return (self.lQ, self.lR1, self.charge)


@dataclass(frozen=True)
class Pipeline:
    """Intermediate objects of one l(Q) computation, kept for inspection."""

    space: object
    module: object
    dual: object
    dual_inclusion: object
    bidual: object
    evaluation: object
    length: int


def lq_pipeline(spec, params=None, window=None, n=None):
    params = params or TruncationParams.for_j(spec.j)
    space = h0_basis(spec, spec.default_order if n is None else n, window)
    m = module_from_sections(space, spec, params)
    dm, incl = dual(m, params)
    bidual, rho = bidual_and_evaluation(m, params, dual_data=(dm, incl))
    length = cokernel_length(rho, params)
    return Pipeline(space, m, dm, incl, bidual, rho, length)


def compute_invariants(spec, params=None, h0_window=None, h1_window=None):
    """Run both invariant computations and check the results against the bounds."""
    params = params or TruncationParams.for_j(spec.j)
    if h1_window is None:
        h1 = h1_stable(spec)
    else:
        h1 = h1_dimension(spec, spec.default_order, h1_window)
    pipe = lq_pipeline(spec, params, h0_window)
    lq, lr1 = pipe.length, h1.dimension
    j = spec.j
    diagnostics = {
        "neighborhood_order": spec.default_order,
        "module_order": pipe.module.diagnostics["neighborhood_order"],
        "h0_dim": pipe.space.dim,
        "generators": pipe.module.gen_count,
        "relations": len(pipe.module.relations),
        "relation_degree": pipe.module.diagnostics["relation_degree"],
        "dual_generators": pipe.dual.gen_count,
        "dual_relations": len(pipe.dual.relations),
        "h1_window": [h1.window.k_lo, h1.window.k_hi],
        "h0_window_k_max": f"i+{pipe.space.window.k_hi}",
        "max_degree": params.max_degree,
    }
    report = InvariantReport(
        j,
        spec.p,
        lq,
        lr1,
        lq + lr1,
        generic=(j >= 2 and (lq, lr1) == closed_form_generic(j)),
        split=not spec.p,
        bounds_ok=True,
        diagnostics=diagnostics,
    )
    ok, notes = verify_bounds(report)
    if notes:
        diagnostics["bound_notes"] = notes
    return InvariantReport(
        report.j, report.p, lq, lr1, lq + lr1, report.generic, report.split, ok, diagnostics
    )


def verify_bounds(report):
    """Check the invariant bounds; returns (ok, notes).

    Upper bounds use the orientation of the tabulated data:
    l(Q) <= j(j+1)/2 and l(R^1) <= j(j-1)/2.
    """
    j = report.j
    notes = []
    if report.charge != report.lQ + report.lR1:
        notes.append("charge != l(Q) + l(R1)")
    if j < 2:
        expect = closed_form_split(j)
        if report.pair != expect:
            notes.append(f"j={j} must give {expect}")
        return not notes, notes
    q_hi, r_hi = closed_form_split(j)
    if not 1 <= report.lQ <= q_hi:
        notes.append(f"l(Q)={report.lQ} outside [1, {q_hi}]")
    if not j - 1 <= report.lR1 <= r_hi:
        notes.append(f"l(R1)={report.lR1} outside [{j - 1}, {r_hi}]")
    if not j <= report.charge <= j * j:
        notes.append(f"charge={report.charge} outside [{j}, {j * j}]")
    if report.split and report.pair != (q_hi, r_hi):
        notes.append("split bundle does not attain the upper bounds")
    return not notes, notes


def survey_specs(j, max_support=1):
    """Unit-coefficient supports of size <= max_support, in e_n order."""
    if j < 2:
        raise ValueError("survey needs j >= 2")
    if max_support not in (1, 2):
        raise ValueError("max_support must be 1 or 2")
    count = len(enumerate_monomials(j))
    supports = [(n,) for n in range(1, count + 1)]
    if max_support == 2:
        supports += list(itertools.combinations(range(1, count + 1), 2))
    return [(s, BundleSpec(j, e(j, *s))) for s in supports]


def survey(j, max_support=1, params=None, workers=1):
    items = survey_specs(j, max_support)
    specs = [spec for _, spec in items]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            reports = list(pool.map(lambda s: compute_invariants(s, params), specs))
    else:
        reports = [compute_invariants(s, params) for s in specs]
    return reports


def stratum_key(report):
    return stratum_by_invariants(report.j, report.pair)
