"""Text form of chart polynomials in z, u.

Grammar (whitespace is ignored)::

    expr   := "0" | [sign] term (sign term)*
    term   := factor ("*"? factor)*
    factor := INT | INT "/" INT | "z" ["^" [sign] INT] | "u" ["^" INT] | "e" INT

``eN`` stands for the N-th normal-form monomial of the given splitting type
and may be mixed with explicit monomials; repeated monomials add up.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import BlowupError
from .ring import Poly


class PolyParseError(BlowupError, ValueError):
    def __init__(self, text, token, reason):
        self.text = text
        self.token = token
        super().__init__(f"cannot parse {text!r} at {token!r}: {reason}")


_FACTOR = re.compile(r"(\d+)(?:/(\d+))?|z(?:\^([+-]?\d+))?|u(?:\^(\d+))?|e(\d+)|(\*)")
_SPLIT = re.compile(r"(?<!\^)(?=[+-])")


def _parse_term(text, body, j):
    if not body:
        raise PolyParseError(text, body, "empty term")
    coef = Fraction(1)
    k = i = 0
    shorthand = None
    pos = 0
    prev_star = True
    while pos < len(body):
        m = _FACTOR.match(body, pos)
        if m is None:
            bad = body[pos:]
            if re.match(r"\d*\.\d", bad) or re.match(r"\d+[eE][+-]?\d", bad):
                raise PolyParseError(text, bad, "floating-point coefficients are not allowed")
            if bad.startswith("^-"):
                raise PolyParseError(text, bad, "u-exponents must be non-negative")
            raise PolyParseError(text, bad, "unexpected token")
        num, den, zk, ui, en, star = m.groups()
        if star:
            if prev_star:
                raise PolyParseError(text, body[pos:], "misplaced '*'")
            prev_star = True
        else:
            prev_star = False
            if num is not None:
                if den is not None and int(den) == 0:
                    raise PolyParseError(text, m.group(0), "zero denominator")
                coef *= Fraction(int(num), int(den) if den else 1)
            elif en is not None:
                shorthand = int(en)
            elif m.group(0).startswith("z"):
                k += int(zk) if zk is not None else 1
            else:
                i += int(ui) if ui is not None else 1
        pos = m.end()
    if prev_star:
        raise PolyParseError(text, body, "dangling '*'")
    if shorthand is not None:
        if k or i:
            raise PolyParseError(text, body, "eN cannot be combined with z or u factors")
        from .moduli import enumerate_monomials

        if j is None:
            raise PolyParseError(text, body, "eN needs a splitting type")
        mons = enumerate_monomials(j)
        if not 1 <= shorthand <= len(mons):
            raise PolyParseError(text, body, f"e{shorthand} does not exist for j={j} (N={len(mons)})")
        k, i = mons[shorthand - 1].l, mons[shorthand - 1].i
    return Poly({(k, i): coef})


def parse_poly(text, j=None):
    src = "".join(text.split())
    if not src:
        raise PolyParseError(text, "", "empty expression")
    total = Poly()
    for chunk in _SPLIT.split(src):
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        total = total + _parse_term(text, chunk, j) * sign
    return total


def _monomial_str(k, i):
    parts = []
    if k:
        parts.append("z" if k == 1 else f"z^{k}")
    if i:
        parts.append("u" if i == 1 else f"u^{i}")
    return "*".join(parts)


def format_poly(p):
    """Canonical text: terms by (u-exponent, z-exponent), coefficient 1 elided."""
    if not p:
        return "0"
    out = []
    for (k, i), c in p.sorted_items():
        mono = _monomial_str(k, i)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def monomial_str(k, i):
    return _monomial_str(k, i) or "1"
