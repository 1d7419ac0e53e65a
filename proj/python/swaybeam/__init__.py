"""Python bindings for the sway-recovery link simulator."""

try:
    from ._swaybeam import *  # noqa: F401,F403
    from ._swaybeam import __doc__ as _core_doc  # noqa: F401
except ImportError:  # extension built out-of-tree (e.g. straight from the build dir)
    from _swaybeam import *  # noqa: F401,F403
