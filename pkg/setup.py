from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Without Cython the package still works through the pure-Python kernel.
    setup()
else:
    extensions = [
        Extension(
            "artifact._ckernel",
            ["src/artifact/_ckernel.pyx"],
            extra_compile_args=["-O3"],
        )
    ]
    setup(
        ext_modules=cythonize(
            extensions,
            compiler_directives={"language_level": "3"},
        )
    )
