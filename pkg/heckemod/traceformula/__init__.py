from .trace_utils import *
from .periodicity import *
