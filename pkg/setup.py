"""Builds the optional Cython kernels; the package falls back to pure Python without them."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler / no Cython: keep the pure-Python kernels
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc})")


def ext_modules():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cyclo_scan._ckernels",
        ["src/cyclo_scan/_ckernels.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=ext_modules(), cmdclass={"build_ext": OptionalBuildExt})
