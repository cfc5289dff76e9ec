"""Build script.

The compiled candidate-scan kernel (tiltwall._wallscan) is optional: if
Cython or a C compiler is unavailable the package installs anyway and the
pure-Python fallback is selected at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping optional extension build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping optional extension {ext.name}: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("tiltwall._wallscan", ["src/tiltwall/_wallscan.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
