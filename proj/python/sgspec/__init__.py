"""Laplacian spectrum of the Sierpinski gasket and its boundaryless double cover.

Thin wrapper around the C++ extension. Everything public lives in the
extension module; see the project README for an overview.
"""

try:
    from ._sgspec import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _sgspec import *  # noqa: F401,F403  (in-tree test layout)

__version__ = "0.1.0"
