from argparse import Namespace
from typing import Callable, Dict, Optional, Tuple

from model import HomologyReport, Ring, SimplicialSet
from utils import format_table, option
from utils.config import cfg
from utils.errors import InputError, TruncationError
from utils.loaders import load


def cutoff_options(func: Callable) -> Callable:
    """--ring, --max-degree/-N, --max-length/-L and --json, shared by the computing verbs."""

    decorators = [
        option("--ring", default=cfg.ring, help="coefficient ring: Z, Q or GF(p)"),
        option("-N", "--max-degree", type=int, default=cfg.max_degree, dest="max_degree", help="degree cutoff"),
        option("-L", "--max-length", type=int, default=None, dest="max_length",
               help=f"weight cutoff, required for inputs with loops of edges (default {cfg.max_length} there)"),
        option("--json", dest="json_path", metavar="PATH", help="write the machine-readable report here"),
    ]
    for decorator in reversed(decorators):
        func = decorator(func)
    return func


def resolve_cutoffs(args: Namespace, length_required: bool = False) -> Tuple[Ring, int, Optional[int]]:
    ring = Ring.parse(args.ring)
    N, L = args.max_degree, args.max_length
    if L is None and length_required:
        L = cfg.max_length
    if N < 0 or (L is not None and L < 0):
        raise TruncationError(f"cutoffs must be non-negative, got N={N}, L={L}")
    return ring, N, L


def cutoffs(N: int, L: Optional[int], **extra) -> Dict[str, object]:
    return {"max_degree": N, "max_length": L, **extra}


def load_simplicial(path: str) -> Tuple[SimplicialSet, str]:
    structure, sha = load(path)
    if not isinstance(structure, SimplicialSet):
        raise InputError(f"'{structure.name}' is not a simplicial set", path)
    return structure, sha


def homology_table(report: HomologyReport) -> str:
    return format_table(("degree", "betti", "torsion"), report.rows())


def verdict_table(records) -> str:
    rows = [(r.name, "PASS" if r.passed else "FAIL", r.checked, r.counterexample or "") for r in records]
    return format_table(("check", "verdict", "checked", "counterexample"), rows)
