from .sequences import *
from .tables import *
from .serre import *
