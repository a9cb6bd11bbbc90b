"""Exact linear algebra backend selection.

The compiled GMP backend is used when it has been built; otherwise the
pure-Python implementation is used.  Setting ``BLOWUP_PURE_PYTHON=1``
forces the fallback.
"""

import contextlib
import os

from . import _linalg_py

if os.environ.get("BLOWUP_PURE_PYTHON", "") not in ("", "0"):
    _impl = _linalg_py
else:
    try:
        from . import _linalg_ext as _impl
    except ImportError:  # extension not built
        _impl = _linalg_py

_NAMES = ("BACKEND", "Reducer", "TrackedReducer", "kernel", "rank", "echelon_basis")


def _install(impl):
    for name in _NAMES:
        globals()[name] = getattr(impl, name)


_install(_impl)


def available_backends():
    out = ["python"]
    try:
        from . import _linalg_ext  # noqa: F401
    except ImportError:
        return out
    return ["gmp"] + out


@contextlib.contextmanager
def use_backend(name):
    """Temporarily route every caller of this module to the named backend."""
    if name == "python":
        impl = _linalg_py
    elif name == "gmp":
        from . import _linalg_ext as impl
    else:
        raise ValueError(f"unknown backend {name!r}")
    saved = {n: globals()[n] for n in _NAMES}
    _install(impl)
    try:
        yield impl
    finally:
        globals().update(saved)


__all__ = list(_NAMES) + ["available_backends", "use_backend"]
