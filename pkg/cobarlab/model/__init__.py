from .ring import *
from .matrix import *
from .chain_complex import *
from .simplicial_set import *
from .coalgebra import *
from .necklace import *
from .box import *
from .cubical_set import *
from .cobar_word import *
from .dga import *
from .dg_category import *
from .report import *
