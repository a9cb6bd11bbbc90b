"""Pure-Python exact sparse linear algebra over the rationals.

Vectors are plain ``dict`` objects mapping integer column indices to
``Fraction`` values (zero entries absent).  The pivot of a row is its
smallest column index, so callers control pivot preference through the
order in which they number columns.

This module is the reference backend; ``blowup._linalg_ext`` implements
the same interface on top of GMP.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

BACKEND = "python"


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _clean(vec):
    return {c: _as_fraction(v) for c, v in vec.items() if v}


def _axpy(target, coef, row):
    """target -= coef * row, in place; returns the set of columns touched."""
    for c, v in row.items():
        nv = target.get(c, 0) - coef * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class Reducer:
    """Semi-echelon basis of a subspace, grown one vector at a time."""

    def __init__(self):
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    @property
    def pivots(self):
        return sorted(self._rows)

    def reduce(self, vec):
        v = _clean(vec)
        rows = self._rows
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = v.get(c)
            if not coef:
                continue
            row = rows[c]
            for cc in row:
                if cc != c and cc in rows and cc not in v:
                    heapq.heappush(heap, cc)
            _axpy(v, coef, row)
        return v

    def add(self, vec):
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = 1 / v[p]
        self._rows[p] = {c: x * inv for c, x in v.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def rows(self):
        """Fully reduced echelon rows, ordered by pivot."""
        order = sorted(self._rows)
        done = {}
        for p in reversed(order):
            row = dict(self._rows[p])
            for c in sorted(c for c in row if c != p and c in done):
                coef = row.get(c)
                if coef:
                    _axpy(row, coef, done[c])
            done[p] = row
        return [done[p] for p in order]


class TrackedReducer:
    """Echelon basis of a list of images that remembers how each row arose.

    Each inserted image gets a tag index; reduced rows carry the linear
    combination of tags that produced them.
    """

    def __init__(self):
        self._rows = {}
        self._count = 0

    @property
    def count(self):
        return self._count

    def _reduce(self, v, t):
        rows = self._rows
        heap = [c for c in v if c in rows]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            coef = v.get(c)
            if not coef:
                continue
            row, tag = rows[c]
            for cc in row:
                if cc != c and cc in rows and cc not in v:
                    heapq.heappush(heap, cc)
            _axpy(v, coef, row)
            _axpy(t, coef, tag)
        return v, t

    def push(self, image):
        """Insert an image; return its kernel relation (tag dict) if dependent."""
        idx = self._count
        self._count += 1
        v, t = self._reduce(_clean(image), {idx: Fraction(1)})
        if not v:
            return t
        p = min(v)
        inv = 1 / v[p]
        self._rows[p] = ({c: x * inv for c, x in v.items()}, {c: x * inv for c, x in t.items()})
        return None

    def express(self, vec):
        """Coefficients c with sum(c[k] * image_k) == vec, or None."""
        v, t = self._reduce(_clean(vec), {})
        if v:
            return None
        # reduction subtracted the rows, so t holds minus the combination
        return {c: -x for c, x in t.items()}


def kernel(images):
    """Basis of {c : sum_j c[j] * images[j] == 0}.

    The basis vector produced for a dependent image j has coefficient 1 at
    j and is supported on indices <= j.
    """
    tr = TrackedReducer()
    out = []
    for img in images:
        rel = tr.push(img)
        if rel is not None:
            out.append(rel)
    return out


def rank(vectors):
    r = Reducer()
    for v in vectors:
        r.add(v)
    return r.rank


def echelon_basis(vectors):
    r = Reducer()
    for v in vectors:
        r.add(v)
    return r.rows()
