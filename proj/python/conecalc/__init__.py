"""Exact calculus of positive operators between finite-dimensional
spaces ordered by polyhedral cones.

All rationals cross the boundary as canonical strings ("p/q" or "p");
plain Python ints are accepted on the way in.
"""

try:
    from conecalc._core import *  # noqa: F401,F403  (installed layout)
except ImportError:
    from _core import *  # noqa: F401,F403  (build-tree layout)
