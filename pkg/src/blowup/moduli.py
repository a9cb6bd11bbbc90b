"""Coefficient-space bookkeeping and strata of the moduli sets M_2 and M_3.

A bundle of splitting type j is a point of Q^N, N = (2j-1)(j-1): the
coefficients of its normal-form polynomial in lexicographic order of the
monomials e_1, ..., e_N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .ring import ChartMonomial, Poly, as_scalar, normal_form_window


class MonomialIndex(NamedTuple):
    ordinal: int
    i: int
    l: int

    @property
    def monomial(self):
        return ChartMonomial(self.l, self.i)


def enumerate_monomials(j):
    if j < 2:
        return []
    return [MonomialIndex(n + 1, i, k) for n, (k, i) in enumerate(normal_form_window(j))]


def coefficient_count(j):
    return (2 * j - 1) * (j - 1) if j >= 2 else 0


def coefficients_of(j, p):
    """Coordinates of p in Q^N (lexicographic e_n order)."""
    return tuple(p[(m.l, m.i)] for m in enumerate_monomials(j))


def poly_from_coefficients(j, coeffs):
    mons = enumerate_monomials(j)
    if len(coeffs) != len(mons):
        raise ValueError(f"expected {len(mons)} coefficients for j={j}, got {len(coeffs)}")
    return Poly({(m.l, m.i): c for m, c in zip(mons, coeffs)})


def e(j, *ordinals):
    """Sum of the monomials e_n (unit coefficients)."""
    mons = enumerate_monomials(j)
    out = {}
    for n in ordinals:
        if not 1 <= n <= len(mons):
            raise ValueError(f"e{n} does not exist for j={j} (N={len(mons)})")
        m = mons[n - 1]
        out[(m.l, m.i)] = out.get((m.l, m.i), 0) + 1
    return Poly(out)


@dataclass(frozen=True)
class StratumLabel:
    j: int
    name: str
    relation: str = ""
    invariant_pair: tuple = None
    parameters: tuple = field(default=None)

    def describe(self):
        text = self.name
        if self.parameters is not None:
            text += " [" + ":".join(str(c) for c in self.parameters) + "]"
        return text


def _projective(coords):
    """Normalize a nonzero coordinate tuple so its first nonzero entry is 1."""
    coords = tuple(as_scalar(c) for c in coords)
    lead = next(c for c in coords if c)
    return tuple(c / lead for c in coords)


def stratify_j2(coeffs):
    p10, p11, p21 = (as_scalar(c) for c in coeffs)
    if p10 or p11:
        return StratumLabel(2, "S1", "R1", parameters=_projective((p10, p11)))
    if p21:
        return StratumLabel(2, "S2", "R2")
    return StratumLabel(2, "S0", "")


def stratify_j3(coeffs):
    a = (None,) + tuple(as_scalar(c) for c in coeffs)
    if len(a) != 11:
        raise ValueError("stratify_j3 needs 10 coefficients")
    if a[2] or a[3] or (a[1] and a[4]):
        return StratumLabel(3, "S1", "R1", parameters=_projective(a[1:5]))
    if a[1]:
        return StratumLabel(3, "S2", "R2", parameters=_projective((a[1], a[7])))
    if a[4]:
        return StratumLabel(3, "S2", "R2'", parameters=_projective((a[4], a[5])))
    if a[6] or (a[5] and a[7]):
        return StratumLabel(3, "S3", "R3", parameters=_projective((a[5], a[6], a[7])))
    if a[5]:
        return StratumLabel(3, "S4", "R4", parameters=_projective((a[5], a[9])))
    if a[7]:
        return StratumLabel(3, "S4", "R4'", parameters=_projective((a[7], a[8])))
    if a[8] or a[9]:
        return StratumLabel(3, "S5", "R5", parameters=_projective((a[8], a[9])))
    if a[10]:
        return StratumLabel(3, "charge-8 point", "R6")
    return StratumLabel(3, "origin", "")


# invariant pair carried by each named stratum (from the computed rows for j = 2, 3)
_NAMED_PAIRS = {
    2: {(1, 1): "S1", (2, 1): "S2", (3, 1): "S0"},
    3: {
        (1, 2): "S1",
        (3, 2): "S2",
        (2, 3): "S3",
        (3, 3): "S4",
        (4, 3): "S5",
        (5, 3): "charge-8 point",
        (6, 3): "origin",
    },
}


def closed_form_split(j):
    """(l(Q), l(R^1)) of the split bundle O(j) + O(-j)."""
    if j < 0:
        raise ValueError("j must be non-negative")
    return (j * (j + 1) // 2, j * (j - 1) // 2)


def closed_form_generic(j):
    if j < 2:
        raise ValueError("the generic stratum is only defined for j >= 2")
    return (1, j - 1)


class StratumKey(NamedTuple):
    pair: tuple
    tag: str
    name: str


def stratum_by_invariants(j, pair):
    pair = tuple(pair)
    if j >= 2 and pair == closed_form_generic(j):
        tag = "generic"
    elif pair == closed_form_split(j):
        tag = "split"
    else:
        tag = "intermediate"
    name = _NAMED_PAIRS.get(j, {}).get(pair, "")
    return StratumKey(pair, tag, name)


def stratify(j, p):
    """Relation-guard label for j in {2, 3}; None otherwise."""
    if j == 2:
        return stratify_j2(coefficients_of(2, p))
    if j == 3:
        return stratify_j3(coefficients_of(3, p))
    return None


def compare_strata(j, p, pair):
    """Relation label, invariant key and whether the two name the same stratum."""
    label = stratify(j, p)
    key = stratum_by_invariants(j, pair)
    agree = None if label is None else (label.name == key.name)
    return label, key, agree
