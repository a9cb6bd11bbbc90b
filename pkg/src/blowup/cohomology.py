"""Two-chart Cech computations on formal neighborhoods of the exceptional line.

Sections and cochains are written in the U trivialization.  A U-section s
is a section over the n-th formal neighborhood when every monomial of
``apply_transition(spec, s, n)`` is holomorphic on V.  H^1 is computed as
the cochains with negative z-exponent (the U-holomorphic part is already a
coboundary) modulo the images of V-holomorphic cochains under T^-1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import StabilityViolation
from .ring import VecSection, apply_transition

COMPONENTS = (0, 1)


@dataclass(frozen=True)
class MonomialWindow:
    """Exponent box for candidate monomials of either component.

    u-exponents run over 0..i_max.  z-exponents run over k_lo..k_hi, where
    k_hi is taken relative to i (k <= i + k_hi) when ``k_hi_relative``.
    """

    i_max: int
    k_lo: int
    k_hi: int
    k_hi_relative: bool = False

    def k_range(self, i):
        hi = i + self.k_hi if self.k_hi_relative else self.k_hi
        return range(self.k_lo, hi + 1)

    def keys(self, i_min=0):
        return [(c, k, i) for i in range(i_min, self.i_max + 1) for k in self.k_range(i) for c in COMPONENTS]

    def contains(self, other):
        if other.i_max > self.i_max or other.k_lo < self.k_lo:
            return False
        if self.k_hi_relative != other.k_hi_relative:
            return False
        return other.k_hi <= self.k_hi

    def widened(self, extra):
        """Enlarge the open end of the window by ``extra``."""
        if self.k_hi_relative:
            return MonomialWindow(self.i_max, self.k_lo, self.k_hi + extra, True)
        return MonomialWindow(self.i_max, self.k_lo - extra, self.k_hi, False)


def h0_window(j, n):
    # component 2 needs k <= i + j; component 1 can only pass k <= i - j by
    # cancelling p * (component 2), whose z-exponents stay below i + 2j.
    return MonomialWindow(n, 0, 2 * j, k_hi_relative=True)


def h1_window(j, n):
    return MonomialWindow(n, -(n + j + 1), -1)


def _non_holomorphic_part(sec):
    out = {}
    for c, poly in enumerate(sec):
        for (k, i), v in poly.items():
            if k > i:
                out[(c, k, i)] = v
    return out


class _Index:
    """Lazy numbering of hashable keys as column indices."""

    def __init__(self, keys=()):
        self.of = {}
        self.keys = []
        for key in keys:
            self[key]

    def __getitem__(self, key):
        idx = self.of.get(key)
        if idx is None:
            idx = self.of[key] = len(self.keys)
            self.keys.append(key)
        return idx

    def encode(self, vec):
        return {self[k]: v for k, v in vec.items()}


def _unit_section(key):
    c, k, i = key
    return VecSection.from_vector({(c, k, i): Fraction(1)})


@dataclass(frozen=True)
class SectionSpace:
    """Basis of H^0 of the n-th formal neighborhood with the (x, y) action.

    ``basis`` is in reduced echelon form with respect to the canonical
    monomial order (u-exponent, z-exponent, component); ``leading[t]`` is
    the pivot monomial of ``basis[t]``, where that basis element has
    coefficient 1 and every other element has coefficient 0.  ``x_action[t]``
    holds the coordinates of x * basis[t] (truncated) in this basis.
    """

    spec: object
    n: int
    window: MonomialWindow
    basis: tuple
    leading: tuple
    x_action: tuple
    y_action: tuple

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, sec):
        """Coordinates of a truncated section in the basis (assumes membership)."""
        vec = sec.to_vector()
        return {t: vec[key] for t, key in enumerate(self.leading) if vec.get(key)}

    def combine(self, coords):
        out = VecSection.of()
        for t, c in coords.items():
            out = out + self.basis[t].scale(c)
        return out


def h0_basis(spec, n=None, window=None):
    """H^0 of the n-th formal neighborhood as an exact basis with x, y matrices."""
    if n is None:
        n = spec.default_order
    if n < 0:
        raise ValueError("neighborhood order must be non-negative")
    default = h0_window(spec.j, n)
    if window is None:
        window = default
    elif not window.contains(default):
        raise ValueError("H^0 window must contain the default window")

    keys = sorted(window.keys(), key=lambda key: (key[2], key[1], key[0]))
    cols = _Index(keys)
    rows = _Index()
    images = []
    for key in keys:
        image = _non_holomorphic_part(apply_transition(spec, _unit_section(key), n))
        images.append(rows.encode(image))
    null = linalg.kernel(images)
    echelon = linalg.echelon_basis(null)

    basis = tuple(VecSection.from_vector({cols.keys[c]: v for c, v in row.items()}) for row in echelon)
    leading = tuple(cols.keys[min(row)] for row in echelon)
    space = SectionSpace(spec, n, window, basis, leading, (), ())

    check = linalg.Reducer()
    for row in echelon:
        check.add(row)
    x_action, y_action = [], []
    for b in basis:
        for shift, store in (((0, 1), x_action), ((1, 1), y_action)):
            moved = b.shift(*shift).truncate(n)
            vec = {cols.of[key]: v for key, v in moved.to_vector().items()}
            assert check.contains(vec), "x/y action left the section space"
            store.append(space.coordinates(moved))
    return SectionSpace(spec, n, window, basis, leading, tuple(x_action), tuple(y_action))


@dataclass(frozen=True)
class H1Result:
    dimension: int
    representatives: tuple
    n: int = 0
    window: MonomialWindow = field(default=None, compare=False)


def _h1_order_key(key):
    # Pivots take the smallest index, so the keys preferred as class
    # representatives (component 1, low u-degree, k near -1) come last.
    c, k, i = key
    return (-c, -i, k)


def h1_dimension(spec, n=None, window=None):
    """dim H^1 of the n-th formal neighborhood, with monomial representatives."""
    if n is None:
        n = spec.default_order
    if n < 0:
        raise ValueError("neighborhood order must be non-negative")
    j = spec.j
    default = h1_window(j, n)
    if window is None:
        window = default
    elif not window.contains(default):
        raise ValueError("H^1 window must contain the default window")

    keys = sorted(window.keys(), key=_h1_order_key)
    cols = _Index(keys)
    inside = cols.of

    def in_window(c, k, i):
        return (c, k, i) in inside

    red = linalg.Reducer()
    for i in range(n + 1):
        # V-holomorphic monomials z^k u^i (k <= i) in each V component.
        for k in range(window.k_lo - 2 * j - 1, i + 1):
            for comp in COMPONENTS:
                unit = VecSection.from_vector({(comp, k, i): Fraction(1)})
                if comp == 0:
                    image = VecSection(unit.first.shift(-j, 0), unit.second)
                else:
                    image = VecSection(-(spec.p * unit.second), unit.second.shift(j, 0))
                image = image.truncate(n)
                vec = {}
                skip = False
                for (c, kk, ii), v in image.to_vector().items():
                    if kk >= 0:
                        continue
                    if in_window(c, kk, ii):
                        vec[inside[(c, kk, ii)]] = v
                    elif c == 1:
                        skip = True
                        break
                    # component-1 monomials below the window are themselves
                    # coboundaries (kk <= ii - j), so they drop out.
                if not skip and vec:
                    red.add(vec)
    pivots = set(red.pivots)
    reps = tuple(
        VecSection.from_vector({cols.keys[c]: Fraction(1)})
        for c in sorted((c for c in range(len(keys)) if c not in pivots), key=lambda c: _rep_sort(cols.keys[c]))
    )
    return H1Result(len(keys) - red.rank, reps, n, window)


def _rep_sort(key):
    c, k, i = key
    return (i, -k, c)


def h1_stable(spec):
    """H^1 at order max(0, 2j-2), checked against the next neighborhood."""
    n = spec.default_order
    res = h1_dimension(spec, n)
    nxt = h1_dimension(spec, n + 1)
    if res.dimension != nxt.dimension:
        raise StabilityViolation(
            f"dim H^1 changed from {res.dimension} to {nxt.dimension} between orders {n} and {n + 1} (j={spec.j})"
        )
    return res


def lift_section(spec, s, n, max_extra=None):
    """Exact section agreeing with ``s`` up to u-degree n, or None.

    Correction terms of u-degree n+1..n+e are searched for e = 1, 2, ...
    """
    j = spec.j
    tail = _non_holomorphic_part(apply_transition(spec, s))
    if not tail:
        return s
    if max_extra is None:
        max_extra = 2 * j + 4
    for e in range(1, max_extra + 1):
        window = MonomialWindow(n + e, 0, 2 * j, k_hi_relative=True)
        keys = window.keys(i_min=n + 1)
        rows = _Index()
        tr = linalg.TrackedReducer()
        for key in keys:
            tr.push(rows.encode(_non_holomorphic_part(apply_transition(spec, _unit_section(key)))))
        target = {rows[k]: -v for k, v in tail.items()}
        coeffs = tr.express(target)
        if coeffs is not None:
            lifted = s + VecSection.from_vector({keys[t]: v for t, v in coeffs.items()})
            assert not _non_holomorphic_part(apply_transition(spec, lifted)), "lift is not exact"
            return lifted
    return None


def exact_sections(spec, max_u_degree):
    """Basis of the sections over the whole blow-up with u-degree <= bound."""
    j = spec.j
    window = MonomialWindow(max_u_degree, 0, 2 * j, k_hi_relative=True)
    keys = sorted(window.keys(), key=lambda key: (key[2], key[1], key[0]))
    rows = _Index()
    images = [rows.encode(_non_holomorphic_part(apply_transition(spec, _unit_section(k)))) for k in keys]
    null = linalg.kernel(images)
    return [VecSection.from_vector({keys[c]: v for c, v in row.items()}) for row in linalg.echelon_basis(null)]
