"""Kernel backend selection.

The hot loops (polynomial arithmetic mod small primes, irreducibility
scans, symbol-class tallies) exist twice: a Cython extension
(`_corekern`) and a pure-Python mirror (`_fallback`).  The compiled one
is preferred when importable; set FFEXT_BACKEND=python to force the
fallback.  Everything downstream imports `kern` from here and stays
agnostic.
"""

import os

_choice = os.environ.get("FFEXT_BACKEND", "").strip().lower()

if _choice in ("python", "fallback", "pure"):
    from . import _fallback as kern
elif _choice in ("compiled", "c", "cython"):
    from . import _corekern as kern  # raises if not built: explicit request
else:
    try:
        from . import _corekern as kern
    except ImportError:
        from . import _fallback as kern

backend_name = kern.BACKEND

__all__ = ["kern", "backend_name"]
