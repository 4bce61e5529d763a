import sys

from setuptools import Extension, setup

# The compiled kernels are an optional speedup; the package falls back to the
# pure-numpy implementation when the extension is unavailable.
ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rellich._kernels",
                ["src/rellich/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover
    print(f"rellich: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
