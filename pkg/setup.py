"""Build script for the optional compiled scoring kernel.

The package is pure Python except for ``corefkit._lea_c``, a Cython
accelerator for the LEA resolution sums. If Cython or a C compiler is
unavailable the build still succeeds and the package falls back to the
pure-Python kernel at import time. Set COREFKIT_SKIP_EXT=1 to skip the
extension entirely.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: optional extension build failed ({exc}); "
              "using the pure-Python kernel")


ext_modules = []
cmdclass = {}
if not os.environ.get("COREFKIT_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("corefkit._lea_c", ["src/corefkit/_lea_c.pyx"])],
            compiler_directives={"language_level": 3},
        )
        cmdclass["build_ext"] = optional_build_ext

setup(ext_modules=ext_modules, cmdclass=cmdclass)
