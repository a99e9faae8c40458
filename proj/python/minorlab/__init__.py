"""Graph containment oracles, adversary bounds, and walk cost models."""

try:
    from ._minorlab import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _minorlab import *  # noqa: F401,F403  (in-tree build on sys.path)
