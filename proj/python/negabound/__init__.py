"""Exact negativity, entanglement conditions, and certified lower bounds."""

try:
    # Packaged layout: the extension is installed inside this package.
    from ._negabound import *  # noqa: F401,F403
    from ._negabound import __version__  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits on PYTHONPATH next to the package.
    from _negabound import *  # noqa: F401,F403
    from _negabound import __version__  # noqa: F401
