"""Build script for the optional GMP kernel extension.

Metadata lives in pyproject.toml.  When Cython or the GMP headers are
missing the package installs without the extension and falls back to the
pure-Python kernels.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: kernel extension not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} not built ({exc}); using pure Python")


try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension(
            "fiberfield._kernels._ckernels",
            ["src/fiberfield/_kernels/_ckernels.pyx"],
            libraries=["gmp"],
            extra_compile_args=["-O2"],
        )],
        compiler_directives=dict(language_level="3", boundscheck=False, wraparound=False),
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
