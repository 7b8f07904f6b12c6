"""Exact combinatorics of laminations under angle doubling."""

try:
    from ._lamina import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _lamina import *  # noqa: F401,F403  (build-tree layout)
