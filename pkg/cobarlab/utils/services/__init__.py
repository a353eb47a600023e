from . import linalg_service
from . import simplicial_service
from . import necklace_service
from . import cubical_service
from . import rigidify_service
from . import cobar_service
from . import dgnerve_service
from . import hochschild_service
from . import fixture_service
from . import verify_service
