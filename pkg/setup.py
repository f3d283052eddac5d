import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KSTABILITY_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("kstability._kernels", ["src/kstability/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
