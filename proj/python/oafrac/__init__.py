"""Mixed-level orthogonal arrays: size bounds, group-based constructions,
strength/conjugacy verification and small exhaustive searches.

Everything is implemented in the C++ core; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
