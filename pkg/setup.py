"""Build the optional Cython lattice-point kernel.

If Cython or a C compiler is unavailable the package still installs and
falls back to the pure-Python enumerator in ``pbwpoly._lattice_py``.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    import numpy as np
except ImportError:  # pragma: no cover - build without the extension
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pbwpoly._lattice",
                ["src/pbwpoly/_lattice.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
