from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext = Extension(
    "blowup._linalg_ext",
    ["src/blowup/_linalg_ext.pyx"],
    include_dirs=["src/blowup"],
    libraries=["gmpxx", "gmp"],
    language="c++",
    extra_compile_args=["-O2", "-std=c++17"],
)

# Without Cython the package still installs; linalg falls back to pure Python.
setup(
    ext_modules=cythonize([ext], compiler_directives={"language_level": 3}) if cythonize else [],
)
