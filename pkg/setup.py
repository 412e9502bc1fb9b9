"""Build script: compiles the optional canonicalization kernel.

The package is pure Python apart from ``moricensus._canon_cy``, a Cython
version of the graph canonical-form search.  The extension is optional:
if Cython or a C compiler is unavailable the install proceeds and the
package falls back to the pure-Python kernel at import time.  Set
MORICENSUS_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MORICENSUS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "moricensus._canon_cy",
                    ["src/moricensus/_canon_cy.pyx"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
