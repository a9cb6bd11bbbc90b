# distutils: language = c++
# distutils: libraries = gmpxx gmp
# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed exact sparse linear algebra, same interface as ``_linalg_py``."""

from cython.operator cimport dereference as deref, preincrement as inc
from libcpp cimport bool as cbool
from libcpp.map cimport map as cmap
from libcpp.string cimport string
from libcpp.vector cimport vector

from fractions import Fraction

BACKEND = "gmp"


cdef extern from "gmpxx.h":
    cdef cppclass mpq_class:
        pass


cdef extern from "_linalg_core.hpp" namespace "blowup":
    ctypedef cmap[long, mpq_class] Vec

    void vec_set_si(Vec& v, long col, long num, long den)
    void vec_set_str(Vec& v, long col, const string& s) except +
    cbool q_fits(const mpq_class& q)
    long q_num(const mpq_class& q)
    long q_den(const mpq_class& q)
    string q_num_str(const mpq_class& q)
    string q_den_str(const mpq_class& q)

    cdef cppclass ReducerCore:
        size_t rank()
        vector[long] pivots()
        void reduce(Vec& v)
        cbool add(Vec& v)
        vector[Vec] echelon()

    cdef cppclass TrackedCore:
        long count
        cbool push(Vec& v, Vec& t)
        cbool express(Vec& v, Vec& t)


cdef object _fraction(const mpq_class& q):
    if q_fits(q):
        return Fraction(q_num(q), q_den(q))
    return Fraction(int(q_num_str(q).decode()), int(q_den_str(q).decode()))


cdef void _load(Vec& out, dict vec) except *:
    cdef long num, den
    for c, v in vec.items():
        if not v:
            continue
        if isinstance(v, Fraction):
            n, d = v.numerator, v.denominator
        elif isinstance(v, int) and not isinstance(v, bool):
            n, d = v, 1
        else:
            raise TypeError(f"exact rational expected, got {type(v).__name__}")
        try:
            num = n
            den = d
        except OverflowError:
            vec_set_str(out, c, f"{n}/{d}".encode())
        else:
            vec_set_si(out, c, num, den)


cdef dict _dump(Vec& v):
    cdef dict out = {}
    cdef cmap[long, mpq_class].iterator it = v.begin()
    while it != v.end():
        out[deref(it).first] = _fraction(deref(it).second)
        inc(it)
    return out


cdef class Reducer:
    """Semi-echelon basis of a subspace, grown one vector at a time."""

    cdef ReducerCore core

    def __len__(self):
        return self.core.rank()

    @property
    def rank(self):
        return self.core.rank()

    @property
    def pivots(self):
        return list(self.core.pivots())

    def reduce(self, vec):
        cdef Vec v
        _load(v, vec)
        self.core.reduce(v)
        return _dump(v)

    def add(self, vec):
        cdef Vec v
        _load(v, vec)
        return self.core.add(v)

    def contains(self, vec):
        cdef Vec v
        _load(v, vec)
        self.core.reduce(v)
        return v.empty()

    def rows(self):
        """Fully reduced echelon rows, ordered by pivot."""
        cdef vector[Vec] rows = self.core.echelon()
        return [_dump(rows[t]) for t in range(rows.size())]


cdef class TrackedReducer:
    """Echelon basis of a list of images that remembers how each row arose."""

    cdef TrackedCore core

    @property
    def count(self):
        return self.core.count

    def push(self, image):
        """Insert an image; return its kernel relation (tag dict) if dependent."""
        cdef Vec v, t
        _load(v, image)
        if self.core.push(v, t):
            return _dump(t)
        return None

    def express(self, vec):
        """Coefficients c with sum(c[k] * image_k) == vec, or None."""
        cdef Vec v, t
        _load(v, vec)
        if self.core.express(v, t):
            return _dump(t)
        return None


def kernel(images):
    cdef TrackedReducer tr = TrackedReducer()
    out = []
    for img in images:
        rel = tr.push(img)
        if rel is not None:
            out.append(rel)
    return out


def rank(vectors):
    cdef Reducer r = Reducer()
    for v in vectors:
        r.add(v)
    return r.rank


def echelon_basis(vectors):
    cdef Reducer r = Reducer()
    for v in vectors:
        r.add(v)
    return r.rows()
