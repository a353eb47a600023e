from .homology import Homology
from .loop import Loop
from .cobar import Cobar
from .rigidify import Rigidify
from .pi1_algebra import Pi1Algebra
from .hochschild import Hochschild
from .verify import Verify
