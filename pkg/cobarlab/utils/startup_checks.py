from model import Ring
from utils.config import cfg
from utils.errors import InputError


def check_ring() -> None:
    try:
        Ring.parse(cfg.ring)
    except InputError:
        raise AttributeError(
            f"Configuration is not set up properly! COBARLAB_RING={cfg.ring!r} is not a ring. Use Z, Q or GF(p).")


def check_bounds() -> None:
    if cfg.necklace_bound > 10:
        raise AttributeError(
            f"Configuration is not set up properly! COBARLAB_NECKLACE_BOUND={cfg.necklace_bound} would enumerate "
            "millions of necklace maps. Please use at most 10.")

    if cfg.nerve_bound > 5:
        raise AttributeError(
            f"Configuration is not set up properly! COBARLAB_NERVE_BOUND={cfg.nerve_bound} is out of reach of the "
            "dg nerve search. Please use at most 5.")


checks = [check_ring, check_bounds]
