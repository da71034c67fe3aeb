try:
    from ._gaptlz import *  # noqa: F401,F403
except ImportError:  # build-tree layout: extension next to the package
    from _gaptlz import *  # noqa: F401,F403
