"""Python surface of the nonlinlab numerical laboratory.

The compiled extension carries the actual operations; this package just
re-exports them so `import nonlinlab` works both from an installed wheel
and from a build tree with the extension on PYTHONPATH.
"""

try:
    from ._nonlinlab import *  # noqa: F401,F403
    from ._nonlinlab import __doc__ as _ext_doc
except ImportError:  # build-tree layout: extension next to the package
    from _nonlinlab import *  # noqa: F401,F403
    from _nonlinlab import __doc__ as _ext_doc

__all__ = [name for name in dir() if not name.startswith("_")]
