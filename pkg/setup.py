import os

from setuptools import Extension, setup


def extensions():
    """Build the compiled kernel unless explicitly disabled or Cython is missing."""
    if os.environ.get("PWT_PURE_PYTHON"):
        return []
    if not os.path.exists("src/pwt/_kernels.pyx"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "pwt._kernels",
        ["src/pwt/_kernels.pyx"],
        # fp-contract must stay off so the compiled loops are bit-identical
        # to the pure-Python engine.
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
