"""Decision procedure and countermodel generator for intuitionistic modal
logics with the 'later' modality (linear `lc` and branching `km`).

The heavy lifting lives in the compiled extension `_laterproof`; this package
just re-exports it. When installed as a wheel the extension sits inside the
package; during in-tree development it is found on PYTHONPATH directly.
"""

try:
    from ._laterproof import *  # noqa: F401,F403
    from ._laterproof import __version__  # noqa: F401
except ImportError:
    from _laterproof import *  # noqa: F401,F403
    from _laterproof import __version__  # noqa: F401
