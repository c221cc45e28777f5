"""Build script: compiles the optional convolution extension.

The extension is a pure speedup; if Cython or a C compiler is missing the
package installs anyway and falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vwpt._convolve",
                sources=["src/vwpt/_convolve.pyx"],
            )
        ],
        language_level=3,
    )
except Exception:
    pass

setup(ext_modules=ext_modules)
