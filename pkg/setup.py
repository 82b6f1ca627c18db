"""Optional accelerator build for the simulator kernel.

The event kernel in ``src/nocwctt/sim/_kernel.py`` is plain Python that
Cython can compile as-is.  Building it is optional: without the extension
the same file runs interpreted, so behaviour is identical either way.

    python setup.py build_ext --inplace

drops the compiled module next to the source, where the import machinery
picks it over the .py file.  If Cython or a C compiler is missing the
build degrades to the pure-Python kernel.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/nocwctt/sim/_kernel.py"],
        compiler_directives={"language_level": 3},
        quiet=True,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
