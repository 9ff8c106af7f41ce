try:
    from ._secregen import *  # noqa: F401,F403
    from ._secregen import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package
    from _secregen import *  # noqa: F401,F403
    from _secregen import __version__  # noqa: F401
