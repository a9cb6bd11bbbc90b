"""Finitely presented modules over the local ring of the blown-up point.

The ring is Q[x, y] localized at (x, y).  Everything is computed with
polynomial representatives: kernels (syzygies, duals) are extracted
degree by degree, and lengths are read off from m-adic truncations,
which is exact here because every cokernel involved is supported at the
origin.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cohomology import h0_basis, lift_section
from .errors import NonFiniteLength, RankAssertionFailure, StabilizationFailure
from .ring import Poly

XY_ZERO = Poly()


@dataclass(frozen=True)
class TruncationParams:
    initial_degree: int
    step: int = 1
    max_degree: int = 16

    def __post_init__(self):
        if self.initial_degree < 1:
            raise ValueError("initial_degree must be >= 1")
        if self.max_degree < self.initial_degree:
            raise ValueError("max_degree must be >= initial_degree")
        if self.step < 1:
            raise ValueError("step must be >= 1")

    @classmethod
    def for_j(cls, j, max_degree=None):
        return cls(2 * j + 2, 1, 4 * j + 8 if max_degree is None else max(max_degree, 2 * j + 2))

    def widened(self, extra):
        return TruncationParams(self.initial_degree + extra, self.step, self.max_degree + extra)


@dataclass(frozen=True)
class FPModule:
    """Module presented by generators and relations.

    ``relations`` is a tuple of columns; each column is a tuple of (x, y)
    polynomials, one entry per generator.  ``elements`` optionally holds a
    concrete realization of each generator.
    """

    gen_labels: tuple
    relations: tuple = ()
    elements: tuple = field(default=(), compare=False)
    diagnostics: dict = field(default_factory=dict, compare=False)

    @property
    def gen_count(self):
        return len(self.gen_labels)

    def is_free(self):
        return not self.relations


@dataclass(frozen=True)
class ModuleHom:
    """Images of the source generators, as columns over the target generators."""

    source: FPModule
    target: FPModule
    matrix: tuple

    def image(self, idx):
        return self.matrix[idx]


def free_module(rank, labels=None):
    return FPModule(tuple(labels or (f"e{t + 1}" for t in range(rank))))


# -- (x, y) polynomial helpers --------------------------------------------


def xy_degree(poly):
    return max((a + b for a, b in poly), default=-1)


def vector_degree(col):
    return max((xy_degree(p) for p in col), default=-1)


def xy_str(poly):
    if not poly:
        return "0"
    parts = []
    for (a, b), c in sorted(poly.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
        mono = "*".join(s for s in (_pow("x", a), _pow("y", b)) if s)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def _pow(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _monomials_upto(d):
    return [(a, t - a) for t in range(d + 1) for a in range(t, -1, -1)]


def _monomials_of(d):
    return [(a, d - a) for a in range(d, -1, -1)]


def apply_column(col, elements, act):
    """sum_i col[i] * elements[i] with a monomial action ``act(elem, a, b)``."""
    out = {}
    for f, elem in zip(col, elements):
        for (a, b), c in f.items():
            for key, v in act(elem, a, b).items():
                out[key] = out.get(key, 0) + c * v
    return {k: v for k, v in out.items() if v}


# -- degree-by-degree kernel extraction -----------------------------------


def kernel_generators(elements, act, params, what="kernel"):
    """Generators of {f in R^r : sum f_i * elements_i = 0}.

    ``elements`` are dicts (key -> coefficient) in some module where the
    monomial x^a y^b acts through ``act(elem, a, b)``.  Unknowns are
    processed in increasing total degree, so the kernel of every degree
    truncation is obtained incrementally.  At degree d the new kernel
    vectors are reduced modulo monomial multiples of the generators already
    found; the search stops after two consecutive silent degrees once
    ``params.initial_degree`` is reached.
    """
    r = len(elements)
    unknowns = {}
    unknown_keys = []
    images = {}
    tr = linalg.TrackedReducer()
    span = linalg.Reducer()
    gens = []
    degrees = []
    quiet = 0
    history = []
    d = 0
    for d in range(params.max_degree + 1):
        fresh = []
        for mono in _monomials_of(d):
            for g in range(r):
                key = (g, *mono)
                unknowns[key] = len(unknown_keys)
                unknown_keys.append(key)
                img = act(elements[g], *mono)
                rel = tr.push({images.setdefault(k, len(images)): v for k, v in img.items()})
                if rel is not None:
                    fresh.append(rel)
        # monomial multiples of earlier generators reaching degree d
        for h, e in zip(gens, degrees):
            for mono in _monomials_of(d - e):
                span.add(_shift_coeffs(h, mono, unknowns))
        new = 0
        for rel in fresh:
            if span.add(rel):
                vec = _to_column(rel, unknown_keys, r)
                gens.append(vec)
                degrees.append(vector_degree(vec))
                new += 1
        history.append(new)
        quiet = 0 if new else quiet + 1
        if quiet >= 2 and d + 1 >= params.initial_degree:
            break
    else:
        # max_degree >= initial_degree, so reaching the cap means quiet < 2
        raise StabilizationFailure(
            f"{what}: new generators still appearing at degree cap {params.max_degree}",
            {"per_degree_new": history},
        )
    # generators are stored as (x, y) polynomial columns
    cols = tuple(tuple(p for p in vec) for vec in gens)
    return cols, {"stable_degree": d, "per_degree_new": history}


def _shift_coeffs(col, mono, unknowns):
    a, b = mono
    out = {}
    for g, f in enumerate(col):
        for (aa, bb), c in f.items():
            out[unknowns[(g, aa + a, bb + b)]] = c
    return out


def _to_column(rel, unknown_keys, r):
    parts = [dict() for _ in range(r)]
    for idx, c in rel.items():
        g, a, b = unknown_keys[idx]
        parts[g][(a, b)] = c
    return tuple(Poly(p) for p in parts)


def _act_section(vec, a, b):
    return {(c, k + b, i + a + b): v for (c, k, i), v in vec.items()}


def _act_free(vec, a, b):
    return {(c, aa + a, bb + b): v for (c, aa, bb), v in vec.items()}


def _free_vector(col):
    """Column of (x, y) polynomials -> {(row, a, b): coefficient}."""
    out = {}
    for row, f in enumerate(col):
        for (a, b), c in f.items():
            out[(row, a, b)] = c
    return out


def _transpose_rows(relations, r):
    """Rows of the relation matrix as vectors in R^t."""
    rows = []
    for g in range(r):
        out = {}
        for t, col in enumerate(relations):
            for (a, b), c in col[g].items():
                out[(t, a, b)] = c
        rows.append(out)
    return rows


# -- the module of sections -----------------------------------------------


def minimal_generator_indices(space):
    """Indices of basis elements lifting a basis of H^0 / (x, y) H^0."""
    red = linalg.Reducer()
    for coords in space.x_action + space.y_action:
        red.add(coords)
    picked = []
    for t in range(space.dim):
        if red.add({t: Fraction(1)}):
            picked.append(t)
    return picked


def _label(key, used):
    c, k, i = key
    base = ("alpha" if c == 0 else "beta") + str(k)
    label = base if base not in used else f"{base}_u{i}"
    used.add(label)
    return label


def module_from_sections(space, spec=None, params=None, max_order_raise=4):
    """Presentation of the module of sections generated by H^0 of the neighborhood.

    Minimal generators are chosen from the echelon basis of ``space``; each
    is lifted to an exact section over the blow-up, and relations are the
    exact polynomial syzygies among the lifts.  The neighborhood order is
    raised while the generator count still changes at order n + 1.
    """
    spec = spec if spec is not None else space.spec
    params = params or TruncationParams.for_j(spec.j)
    n0 = space.n
    picked = minimal_generator_indices(space)
    raised = 0
    while True:
        nxt = h0_basis(spec, space.n + 1)
        if len(minimal_generator_indices(nxt)) == len(picked):
            break
        raised += 1
        if raised > max_order_raise:
            raise StabilizationFailure(
                f"generator count of H^0 still changing at order {space.n + 1}",
                {"start_order": n0},
            )
        space, picked = nxt, minimal_generator_indices(nxt)

    used = set()
    labels, lifts = [], []
    for t in picked:
        lifted = lift_section(spec, space.basis[t], space.n)
        if lifted is None:
            raise StabilizationFailure(
                f"generator {space.leading[t]} of H^0 at order {space.n} did not lift to an exact section",
                {"order": space.n},
            )
        labels.append(_label(space.leading[t], used))
        lifts.append(lifted)
    elements = [s.to_vector() for s in lifts]
    relations, diag = kernel_generators(elements, _act_section, params, what="relations")
    diagnostics = {
        "neighborhood_order": space.n,
        "order_raised": space.n - n0,
        "h0_dim": space.dim,
        "relation_degree": diag["stable_degree"],
    }
    return FPModule(tuple(labels), relations, tuple(lifts), diagnostics)


# -- dual, double dual, evaluation ----------------------------------------


def dual(m, params=None):
    """Hom(M, R) as the kernel of the transposed relation matrix.

    Returns the dual module (generators are functionals, realized as their
    values on the generators of M, with their own relations) and the
    inclusion of the dual into the free module on the dual basis of M's
    generators.
    """
    r = m.gen_count
    params = params or TruncationParams(2, 1, 16)
    rows = _transpose_rows(m.relations, r)
    if not m.relations:
        funcs = tuple(tuple(Poly.constant(1) if s == t else XY_ZERO for s in range(r)) for t in range(r))
        kdiag = {"stable_degree": 0}
    else:
        funcs, kdiag = kernel_generators(rows, _act_free, params, what="dual")
    fvecs = [_free_vector(f) for f in funcs]
    if len(funcs) > 0:
        rels, rdiag = kernel_generators(fvecs, _act_free, params, what="dual relations")
    else:
        rels, rdiag = (), {"stable_degree": 0}
    labels = tuple(_letters(len(funcs)))
    dm = FPModule(
        labels,
        rels,
        funcs,
        {"kernel_degree": kdiag["stable_degree"], "relation_degree": rdiag["stable_degree"]},
    )
    ambient = free_module(r, [f"{lab}*" for lab in m.gen_labels])
    return dm, ModuleHom(dm, ambient, funcs)


def _letters(count):
    alphabet = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    for t in range(count):
        yield alphabet[t] if t < 26 else f"F{t}"


def local_basis(m):
    """Indices of generators forming a basis of M / mM (constant parts of relations)."""
    s = m.gen_count
    red = linalg.Reducer()
    # reversed numbering: later generators are eliminated first
    for col in m.relations:
        const = {s - 1 - g: f[(0, 0)] for g, f in enumerate(col) if f[(0, 0)]}
        red.add(const)
    pivots = {s - 1 - p for p in red.pivots}
    return [g for g in range(s) if g not in pivots]


def bidual_and_evaluation(m, params=None, dual_data=None):
    """Double dual (asserted free of rank 2) and the evaluation map M -> M^vv.

    The dual is reflexive, hence free of rank 2 over the local ring; two of
    its generators spanning it modulo m form a basis (phi_1, phi_2), the
    double dual is free on the dual basis, and a generator g of M evaluates
    to (phi_1(g), phi_2(g)).
    """
    dm, incl = dual_data if dual_data is not None else dual(m, params)
    basis = local_basis(dm)
    if len(basis) != 2:
        raise RankAssertionFailure(
            f"dual needs {len(basis)} local generators, expected 2 (double dual not free of rank 2)"
        )
    b1, b2 = basis
    phi1, phi2 = dm.elements[b1], dm.elements[b2]
    if not _generically_independent(phi1, phi2):
        raise RankAssertionFailure("dual basis candidates are dependent; module does not have rank 2")
    bidual = FPModule(
        ("A**", "B**"),
        (),
        (),
        {"dual_basis": (dm.gen_labels[b1], dm.gen_labels[b2]), "dual_generators": dm.gen_count},
    )
    matrix = tuple((phi1[g], phi2[g]) for g in range(m.gen_count))
    return bidual, ModuleHom(m, bidual, matrix)


def _generically_independent(u, v):
    # some 2x2 minor is a nonzero polynomial
    for s in range(len(u)):
        for t in range(s + 1, len(u)):
            if u[s] * v[t] - u[t] * v[s]:
                return True
    return False


# -- lengths --------------------------------------------------------------


def truncated_colength(columns, rank, degree):
    """dim of R^rank / (span of columns + m^degree R^rank), columns polynomial."""
    red = linalg.Reducer()
    idx = {}
    for col in columns:
        for a, b in _monomials_upto(degree - 1):
            vec = {}
            for row, f in enumerate(col):
                for (aa, bb), c in f.items():
                    if aa + a + bb + b < degree:
                        key = (row, aa + a, bb + b)
                        vec[idx.setdefault(key, len(idx))] = c
            if vec:
                red.add(vec)
    total = rank * degree * (degree + 1) // 2
    return total - red.rank


def cokernel_length(h, params=None):
    """Length of the cokernel of a map into a free module of rank 2."""
    rank = h.target.gen_count
    if not h.target.is_free():
        raise ValueError("cokernel_length needs a free target")
    params = params or TruncationParams(2, 1, 16)
    seq = []
    prev = None
    for degree in range(1, params.max_degree + 1):
        val = truncated_colength(h.matrix, rank, degree)
        seq.append(val)
        if prev is not None and val == prev:
            return val
        prev = val
    raise NonFiniteLength(f"truncated colength still growing at degree {params.max_degree}: {seq}")


def colength_sequence(h, upto):
    return [truncated_colength(h.matrix, h.target.gen_count, d) for d in range(1, upto + 1)]


def presentation_is_sound(m, space):
    """Every relation annihilates the truncated generators under the x, y matrices."""
    n = space.n
    for col in m.relations:
        total = apply_column(col, [s.truncate(n).to_vector() for s in m.elements], lambda v, a, b: _trunc(_act_section(v, a, b), n))
        if total:
            return False
    return True


def _trunc(vec, n):
    return {k: v for k, v in vec.items() if k[2] <= n}


def relations_hold_exactly(m):
    """Every relation annihilates the lifted generators with no truncation."""
    elements = [s.to_vector() for s in m.elements]
    return all(not apply_column(col, elements, _act_section) for col in m.relations)


def is_dual_element(m, phi):
    """phi (values on the generators) kills every relation of m."""
    for col in m.relations:
        total = Poly()
        for f, g in zip(phi, col):
            total = total + f * g
        if total:
            return False
    return True


def dual_is_sound(m, dm):
    """phi . Rel == 0 as polynomial identities for every dual generator."""
    return all(is_dual_element(m, phi) for phi in dm.elements)
