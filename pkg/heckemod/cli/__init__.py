from .config import *
from .cache import *
from .workers import *
from .output import *
