import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the compiled kernels if a toolchain is available.

    The package works without them: `ffext._kernels` falls back to the
    pure-Python backend when the extension is missing.
    """

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken toolchain, ...
            print(f"warning: compiled kernels not built ({exc}); "
                  f"the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  f"the pure-Python fallback will be used")


def extensions():
    if os.environ.get("FFEXT_NO_EXT"):
        return []
    pyx = os.path.join("src", "ffext", "_kernels", "_corekern.pyx")
    if not os.path.exists(pyx):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        name="ffext._kernels._corekern",
        sources=[pyx],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
