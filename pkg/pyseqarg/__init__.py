# This file defines what is visible to the outside world when the package
# (pyseqarg) is imported
__version__ = "0.1.0"

from .formulas import *
from .arguments import *
from .attacks import *
from .semantics import *
from .entailment import *
from .mcs import *
from .aba import *
from .descriptions import *
from .config import *
from .reasoner import *
from .equivalence import *
from . import utils
