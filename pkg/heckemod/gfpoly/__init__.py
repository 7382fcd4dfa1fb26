from .fp_poly import *
from .factoring import *
