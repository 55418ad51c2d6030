"""Build hook for the optional compiled kernels.

The package works without the extension (a NumPy fallback is selected at
import time); building it just makes the hot loops fast.  Set
LINKCOHESION_NO_EXT=1 to force a pure-Python install.
"""

import os

from setuptools import setup


def extensions():
    if os.environ.get("LINKCOHESION_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "linkcohesion._kernels_cy",
        sources=["src/linkcohesion/_kernels_cy.pyx"],
        extra_compile_args=["-O3"],
    )
    return cythonize(ext, language_level=3)


setup(ext_modules=extensions())
