from .cartan import AffineType, parse_type  # noqa: F401
from .exceptions import *  # noqa: F401 F403
from .graph import CrystalGraph  # noqa: F401
from .kr_crystal import KRCrystalGraph, build  # noqa: F401
from .version import __version__  # noqa: F401
