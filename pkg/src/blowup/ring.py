"""Exact polynomial data on the two standard charts of the blown-up plane.

Chart U has coordinates (z, u), chart V has (xi, v) with xi = 1/z and
v = z*u.  The exceptional line is {u = 0} in U.  A monomial z^k u^i is
written as the exponent pair (k, i); it reads xi^(i-k) v^i on V.

The blow-down map is (x, y) = (u, z*u), so x acts by u and y by z*u.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import NamedTuple

from .errors import NormalFormError


def as_scalar(value) -> Fraction:
    """Coerce to an exact rational; floats and complex numbers are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class ChartMonomial(NamedTuple):
    k: int
    i: int


def to_v_chart(m) -> tuple[int, int]:
    k, i = m
    return (i - k, i)


def is_v_holomorphic(m) -> bool:
    k, i = m
    return i - k >= 0


class Poly:
    """Sparse bivariate Laurent polynomial with rational coefficients.

    Keys are exponent pairs.  As a chart polynomial the pair is (k, i) for
    z^k u^i; the same class holds polynomials in (x, y) keyed by (a, b).
    Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in dict(terms).items():
                c = as_scalar(c)
                if c:
                    e0, e1 = key
                    clean[(int(e0), int(e1))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, e0, e1, coeff=1):
        return cls({(e0, e1): coeff})

    @classmethod
    def constant(cls, coeff):
        return cls({(0, 0): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key):
        return self._terms.get(tuple(key), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0])))
        return f"Poly({{{body}}})"

    def __neg__(self):
        return Poly({k: -v for k, v in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(as_scalar(other))
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(as_scalar(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_scalar(other)
            return Poly({k: v * c for k, v in self._terms.items()})
        out = {}
        for (a0, a1), u in self._terms.items():
            for (b0, b1), w in other._terms.items():
                key = (a0 + b0, a1 + b1)
                out[key] = out.get(key, 0) + u * w
        return Poly(out)

    __rmul__ = __mul__

    def shift(self, d0, d1):
        """Multiply by the monomial with exponents (d0, d1)."""
        return Poly({(a + d0, b + d1): v for (a, b), v in self._terms.items()})

    def truncate(self, n):
        """Drop terms whose second exponent exceeds n (None keeps everything)."""
        if n is None:
            return self
        return Poly({k: v for k, v in self._terms.items() if k[1] <= n})

    def filter(self, pred):
        return Poly({k: v for k, v in self._terms.items() if pred(k)})

    def max_second(self):
        return max((k[1] for k in self._terms), default=None)

    def sorted_items(self):
        """Terms in canonical chart order: u-exponent, then z-exponent."""
        return sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))


ChartPoly = Poly
ZERO = Poly()


class VecSection(NamedTuple):
    """Pair of chart polynomials: the two components in the U trivialization."""

    first: Poly
    second: Poly

    @classmethod
    def of(cls, first=None, second=None):
        return cls(first if first is not None else ZERO, second if second is not None else ZERO)

    def __add__(self, other):
        return VecSection(self.first + other.first, self.second + other.second)

    def __sub__(self, other):
        return VecSection(self.first - other.first, self.second - other.second)

    def __neg__(self):
        return VecSection(-self.first, -self.second)

    def scale(self, c):
        return VecSection(self.first * c, self.second * c)

    def shift(self, dk, di):
        return VecSection(self.first.shift(dk, di), self.second.shift(dk, di))

    def truncate(self, n):
        return VecSection(self.first.truncate(n), self.second.truncate(n))

    def is_zero(self):
        return not self.first and not self.second

    def components(self):
        return (self.first, self.second)

    def to_vector(self):
        """Flatten to {(component, k, i): coefficient}."""
        out = {}
        for c, poly in enumerate(self):
            for (k, i), v in poly.items():
                out[(c, k, i)] = v
        return out

    @classmethod
    def from_vector(cls, vec):
        parts = ({}, {})
        for (c, k, i), v in vec.items():
            parts[c][(k, i)] = v
        return cls(Poly(parts[0]), Poly(parts[1]))


def normal_form_window(j):
    """All (k, i) allowed by the normal form for splitting type j, lexicographic."""
    return [(k, i) for i in range(1, 2 * j - 1) for k in range(i - j + 1, j)]


def validate_normal_form(j, p):
    """Return the list of monomials of p outside the normal-form window (empty if valid)."""
    if j < 0:
        raise ValueError("splitting type must be non-negative")
    bad = []
    for k, i in sorted(p, key=lambda m: (m[1], m[0])):
        if not (1 <= i <= 2 * j - 2 and i - j + 1 <= k <= j - 1):
            bad.append(ChartMonomial(k, i))
    return bad


def is_normal_form(j, p):
    return not validate_normal_form(j, p)


@dataclass(frozen=True)
class BundleSpec:
    """Splitting type j and extension polynomial p of the transition matrix
    ``T = [[z^j, p], [0, z^-j]]``."""

    j: int
    p: Poly = ZERO

    def __post_init__(self):
        if not isinstance(self.j, int) or self.j < 0:
            raise ValueError(f"splitting type must be a non-negative integer, got {self.j!r}")
        if not isinstance(self.p, Poly):
            object.__setattr__(self, "p", Poly(self.p))
        bad = validate_normal_form(self.j, self.p)
        if bad:
            raise NormalFormError(self.j, bad)

    @property
    def default_order(self):
        """Formal neighborhood order 2j-2 used for the invariants (0 when j <= 1)."""
        return max(0, 2 * self.j - 2)

    def scaled(self, lam):
        return BundleSpec(self.j, self.p * lam)


def apply_transition(spec, s, n=None):
    """Image of a U-section under T, truncated at u-degree n (None: exact)."""
    j = spec.j
    first = s.first.shift(j, 0) + spec.p * s.second
    second = s.second.shift(-j, 0)
    return VecSection(first.truncate(n), second.truncate(n))


def apply_inverse_transition(spec, s, n=None):
    """Image of a V-section under T^-1 = [[z^-j, -p], [0, z^j]]."""
    j = spec.j
    first = s.first.shift(-j, 0) - spec.p * s.second
    second = s.second.shift(j, 0)
    return VecSection(first.truncate(n), second.truncate(n))


def act_x(s, n=None):
    return s.shift(0, 1).truncate(n)


def act_y(s, n=None):
    return s.shift(1, 1).truncate(n)


def act_monomial(s, a, b, n=None):
    """x^a y^b acting on a section: multiplication by z^b u^(a+b)."""
    return s.shift(b, a + b).truncate(n)
