"""Exact invariants of lashing families and their alternating surgeries."""

try:
    from ._lashlab import *  # noqa: F401,F403
    from ._lashlab import __doc__ as _doc
except ImportError:  # running against a build tree, module beside the package
    from _lashlab import *  # noqa: F401,F403
    from _lashlab import __doc__ as _doc

__doc__ = _doc
