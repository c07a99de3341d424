"""Exact constructions for the Peterson toric correspondence.

The heavy lifting lives in the compiled extension ``_ptv``; this package
re-exports it. During development (running from a source tree) the extension
is picked up from ``PTV_MODULE_DIR``.
"""
import os
import sys

_dir = os.environ.get("PTV_MODULE_DIR")
if _dir and _dir not in sys.path:
    sys.path.insert(0, _dir)

try:
    from ._ptv import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _ptv import *  # noqa: F401,F403  (build-tree layout)
