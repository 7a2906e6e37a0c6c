import os

from setuptools import setup

# The compiled kernels are an optional speedup. Anything that fails here
# (no Cython, no compiler) must fall back to a pure-Python build, so the
# extension list is assembled defensively.
ext_modules = []
if not os.environ.get("CUBICTORSION_PURE"):
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "cubictorsion._kernels_c",
                    ["src/cubictorsion/_kernels_c.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # noqa: BLE001
        print("building without compiled kernels: %s" % exc)

setup(ext_modules=ext_modules)
