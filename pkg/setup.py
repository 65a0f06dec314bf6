"""Build the optional compiled state-sum kernel.

Without Cython (or a C compiler) the package installs pure Python and
``skeinkit.kernels`` falls back to ``_kernels_py``.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(["src/skeinkit/_kernels.pyx"], language_level=3)

setup(ext_modules=ext_modules)
