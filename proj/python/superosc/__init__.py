from ._superosc import *  # noqa: F401,F403
from ._superosc import __version__  # noqa: F401
