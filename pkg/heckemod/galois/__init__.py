from .certificates import *
from .deduction import *
