"""Build script for the optional compiled edit-distance kernel.

The package works without a C toolchain: if Cython or the compiler is
unavailable, the build falls back to the pure-Python kernel selected at
import time in morphsuite.distance.
"""
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Best-effort extension build; failures degrade to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(
                f"warning: failed to build {ext.name} ({exc}); "
                "the pure-Python kernel will be used",
                file=sys.stderr,
            )


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/morphsuite/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("warning: Cython not available; building without compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
