from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python fallback in qstrange._kernels_py is picked up at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qstrange._kernels", ["src/qstrange/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
