"""Build script: compiles the optional Cython kernel extension.

The extension is a pure speedup; if Cython or a C compiler is unavailable,
or SPECTRAL_PAIR_NO_EXT is set, the package installs without it and the
pure-Python kernels are used at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            print(f"warning: skipping extension build ({exc}); "
                  f"falling back to pure Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  f"falling back to pure Python kernels")


ext_modules = []
cmdclass = {}
if not os.environ.get("SPECTRAL_PAIR_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("spectral_pair._kernels_cy",
                       ["src/spectral_pair/_kernels_cy.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = OptionalBuildExt
    except ImportError:
        print("warning: Cython not available; building without the "
              "compiled kernel extension")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
