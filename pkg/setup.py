import os

from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or with
# GROVERSIM_PURE_PYTHON set) the package installs pure-Python and the
# numpy fallback kernel is selected at import time.
extensions = []
if not os.environ.get("GROVERSIM_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        extensions = cythonize(
            [Extension("groversim._kernels_cy", ["src/groversim/_kernels_cy.pyx"])],
            language_level=3,
        )

setup(ext_modules=extensions)
