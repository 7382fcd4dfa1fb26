import logging

from .__version__ import __version__

__all__ = ["__version__"]

logging.getLogger(__name__).addHandler(logging.NullHandler())

from . import errors
from . import qseries
from . import hecke
from . import gfpoly
from . import traceformula
from . import modfactor
from . import galois
from .timer import *
