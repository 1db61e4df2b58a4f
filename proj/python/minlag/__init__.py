"""Minimal Lagrangian extensions of the hyperbolic plane.

Python bindings for the C++ core: the two explicit one-parameter families
(earthquake and power boundary maps), elliptic integrals, cross-ratio norm
estimation and the asymptotic ratio experiments.
"""

try:
    from ._minlag import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree builds put _minlag on sys.path
    from _minlag import *  # noqa: F401,F403

__version__ = "0.1.0"
