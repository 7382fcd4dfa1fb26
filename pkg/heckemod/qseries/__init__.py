from .qexpansion import *
from .generators import *
