"""Build script for the optional compiled eigensolver kernel.

The package is pure Python plus one Cython extension holding the hot
Hessenberg/QR loops.  If Cython or a C compiler is unavailable the build
falls back to the pure numpy kernel, which is drop-in compatible but
slower; installation must still succeed in that case.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible, warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            "warning: compiled eigensolver kernel not built (%s); "
            "falling back to the pure Python kernel" % exc,
            file=sys.stderr,
        )


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "warning: Cython not found; installing with the pure Python "
            "eigensolver kernel only",
            file=sys.stderr,
        )
        return []
    ext = Extension(
        "ptosc.eigen._solver",
        sources=["src/ptosc/eigen/_solver.pyx"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
