"""Build script: compiles the optional fast kernel when Cython is available.

The package is fully functional without the extension; `steinberg._kernel`
falls back to the pure-Python implementation at import time.
"""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Never fail the install because the accelerator would not compile."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"steinberg: skipping compiled kernel ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"steinberg: skipping {ext.name} ({exc})", file=sys.stderr)


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - cython not installed
        return []
    # note: the kernel indexes Python tuples from the right, so wraparound
    # must stay on
    return cythonize(["src/steinberg/_kernel/fast.pyx"], language_level=3)


setup(ext_modules=_extensions(), cmdclass={"build_ext": _OptionalBuildExt})
