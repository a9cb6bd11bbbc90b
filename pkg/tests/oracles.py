"""Independent reference computations used by the tests.

These deliberately avoid the package's cohomology/module code: they
rebuild the transition by hand and do dense linear algebra modulo a large
prime (rank over GF(P) equals rank over Q unless P divides a minor, which
does not happen for the small coefficients used here).
"""

from fractions import Fraction

P = (1 << 61) - 1


def _mod(c):
    c = Fraction(c)
    return c.numerator % P * pow(c.denominator % P, P - 2, P) % P


def rank_mod_p(rows):
    """Rank of a list of sparse rows {col: Fraction} over GF(P)."""
    pivots = {}
    r = 0
    for row in rows:
        v = {c: _mod(x) for c, x in row.items() if _mod(x)}
        while v:
            c = min(v)
            if c not in pivots:
                inv = pow(v[c], P - 2, P)
                pivots[c] = {cc: x * inv % P for cc, x in v.items()}
                r += 1
                break
            coef = v[c]
            for cc, x in pivots[c].items():
                nv = (v.get(cc, 0) - coef * x) % P
                if nv:
                    v[cc] = nv
                else:
                    v.pop(cc, None)
    return r


def _transition_tail(j, p, comp, k, i, n=None):
    """V-non-holomorphic monomials of T applied to the unit section z^k u^i e_comp."""
    out = {}
    if comp == 0:
        terms = [((0, k + j, i), Fraction(1))]
    else:
        terms = [((1, k - j, i), Fraction(1))]
        terms += [((0, k + a, i + b), Fraction(c)) for (a, b), c in p.items()]
    for (c, kk, ii), v in terms:
        if n is not None and ii > n:
            continue
        if kk > ii:
            out[(c, kk, ii)] = out.get((c, kk, ii), 0) + v
    return {key: v for key, v in out.items() if v}


def _kernel_dim(j, p, cols, n=None):
    index = {}
    # one linear condition per non-holomorphic target monomial: transpose
    by_target = {}
    for t, (comp, k, i) in enumerate(cols):
        for key, v in _transition_tail(j, p, comp, k, i, n).items():
            by_target.setdefault(index.setdefault(key, len(index)), {})[t] = v
    return len(cols) - rank_mod_p(list(by_target.values()))


def section_window(j, i_lo, i_hi):
    return [(c, k, i) for i in range(i_lo, i_hi + 1) for k in range(0, i + 2 * j + 1) for c in (0, 1)]


def h0_dim(j, p, n, extra=0):
    """dim H^0 of the n-th neighborhood over a window k <= i + 2j + extra."""
    cols = [(c, k, i) for i in range(n + 1) for k in range(0, i + 2 * j + extra + 1) for c in (0, 1)]
    return _kernel_dim(j, p, cols, n)


def lq_punctured(j, p, degree=None):
    """l(Q) as dim of sections off the exceptional line modulo global sections.

    Sections of u-degree <= D over the complement of the line (negative
    u-powers allowed in U) modulo global sections of u-degree <= D inject
    into Q and exhaust it for large D.  The sequence can sit on a plateau
    for small D, so it is read at D = 4j + 4 and required to agree at D + 2.
    """
    if degree is None:
        degree = 4 * j + 4

    def at(d):
        return _kernel_dim(j, p, section_window(j, -j - 1, d)) - _kernel_dim(j, p, section_window(j, 0, d))

    val = at(degree)
    if at(degree + 2) != val:
        raise RuntimeError("punctured-section quotient still growing")
    return val


def h1_dim(j, p, n):
    """dim H^1 of the n-th neighborhood as first-component monomials modulo p-images.

    Cochains reduce to first-component z^m u^i with i - j < m < 0; the only
    remaining coboundaries are the projections of -p * z^k u^i, -j <= k <= i.
    """
    basis = [(m, i) for i in range(n + 1) for m in range(i - j + 1, 0)]
    pos = {key: t for t, key in enumerate(basis)}
    rows = []
    for i in range(n + 1):
        for k in range(-j, i + 1):
            row = {}
            for (a, b), c in p.items():
                key = (k + a, i + b)
                if key in pos:
                    row[pos[key]] = row.get(pos[key], 0) - Fraction(c)
            if any(row.values()):
                rows.append(row)
    return len(basis) - rank_mod_p(rows)
