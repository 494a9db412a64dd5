from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # optional=True: a failed compile falls back to the pure-Python kernels
    ext_modules = cythonize(
        [
            Extension(
                "twoeig._kernels._native",
                ["src/twoeig/_kernels/_native.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
