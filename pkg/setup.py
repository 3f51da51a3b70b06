from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; modhodge.kernels falls back
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("modhodge._ckernels", ["src/modhodge/_ckernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
