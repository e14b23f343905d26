import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the C kernel if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print("spherex: skipping compiled kernel (%s)" % exc, file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print("spherex: skipping compiled kernel (%s)" % exc, file=sys.stderr)


extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("spherex._speedups", ["src/spherex/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("spherex: Cython not available, building pure-Python only", file=sys.stderr)

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
