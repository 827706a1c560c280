import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("AFFINE_BRAUER_PURE"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        # the pure-Python tracer is used at runtime
        pass
    else:
        ext_modules = cythonize(
            [Extension("affine_brauer._concat", ["src/affine_brauer/_concat.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
