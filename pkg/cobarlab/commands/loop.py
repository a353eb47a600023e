from argparse import Namespace
from typing import Dict, List

from model import RunReport
from utils import Cog, command, option
from utils.errors import ConnectivityError
from utils.services import cobar_service, linalg_service, rigidify_service, simplicial_service

from .common import cutoff_options, cutoffs, homology_table, load_simplicial, resolve_cutoffs, verdict_table


def products_dict(products) -> Dict[str, List[str]]:
    """``p.i*q.j`` -> coordinates of the product of class i in degree p with class j in degree q"""

    return {f"{p}.{i}*{q}.{j}": [str(c) for c in coords] for (p, i, q, j), coords in sorted(products.items())}


class Loop(Cog):
    @command("loop", "Loop space homology of a one-vertex simplicial set, checked against its cobar construction")
    @option("input", help="simplicial-set JSON file with a single vertex")
    @cutoff_options
    def loop(self, args: Namespace) -> RunReport:
        S, sha = load_simplicial(args.input)
        if not S.is_one_vertex():
            ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
        ring, N, L = resolve_cutoffs(args, rigidify_service.has_edge_cycle(S))
        x = S.vertices[0]

        loops = rigidify_service.mapping_complex(S, x, x, N, L, ring)
        A = cobar_service.cobar(simplicial_service.aw_coalgebra(S, N + 1, ring), N, L)
        exact = max(cobar_service.exact_degree(A, N, L), 0)
        truncated = A.has_degree_zero_generators
        loop_report = linalg_service.homology(loops.complex, exact, truncated)
        cobar_complex = cobar_service.dga_complex(A)
        algebra = cobar_service.complex_homology_algebra(cobar_complex, exact)
        verdicts = cobar_service.loop_cobar_iso(S, N, L, ring)
        presentation = cobar_service.h0_presentation(S, ring)

        print(f"Λ({S.name})({x},{x}) over {ring}: basis sizes {loops.complex.ranks()}")
        print(homology_table(loop_report))
        print(f"H0 = {presentation}")
        print(f"\n{A.name}: basis sizes {cobar_complex.ranks()}")
        print(homology_table(algebra.report))
        nonzero = {k: v for k, v in products_dict(algebra.products).items() if any(c != "0" for c in v)}
        if nonzero:
            print("\nproducts of classes (degree.index):")
            for key, coords in nonzero.items():
                print(f"  {key} = ({', '.join(coords)})")
        if truncated:
            print(f"\nedges are degree 0 generators, homology is truncated by L={L}")
        print()
        print(verdict_table(verdicts))

        results = {
            "name": S.name,
            "exact_through": exact,
            "loop_homology": loop_report.to_dict(),
            "loop_basis_sizes": loops.complex.ranks(),
            "h0_presentation": presentation.to_dict(),
            "cobar_homology": algebra.report.to_dict(),
            "products": products_dict(algebra.products),
        }
        return RunReport("loop", sha, cutoffs(N, L), str(ring), results, verdicts)
