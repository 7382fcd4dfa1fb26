from .hecke_ops import *
from .charpoly import *
