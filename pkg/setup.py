"""Build script: compiles the optional enumeration kernel.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build falls back to pure Python and the
kernel dispatcher selects the fallback at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError
from setuptools.extension import Extension


class optional_build_ext(build_ext):
    """Skip the extension instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except (PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except (CCompilerError, ExecError, PlatformError, FileNotFoundError) as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: building the compiled kernel failed ({exc}); "
              "falling back to the pure-Python kernels")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not available; building without the compiled kernel")
        return []
    return cythonize(
        [
            Extension(
                "flagshift._kernels._ideals_cy",
                ["src/flagshift/_kernels/_ideals_cy.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
