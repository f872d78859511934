"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python twin of
the kernel module is selected at import time), so any build failure here
degrades to the pure build instead of aborting the install.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name} ({exc})")


ext_modules = []
if not os.environ.get("LOGDERIV_PURE_KERNELS"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("logderiv._ckernels", ["src/logderiv/_ckernels.pyx"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available, building pure-Python only")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
