"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension; ``tripatch.kernel``
falls back to the pure-Python twin if the build is skipped or fails.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("tripatch._speedups", ["src/tripatch/_speedups.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print("warning: Cython unavailable, building pure-Python only (%s)" % exc)

setup(ext_modules=ext_modules)
