from argparse import Namespace

from model import RunReport
from utils import Cog, command, option
from utils.services import linalg_service, rigidify_service

from .common import cutoff_options, cutoffs, homology_table, load_simplicial, resolve_cutoffs


class Rigidify(Cog):
    @command("rigidify", "Chains on the space of paths between two vertices of a simplicial set")
    @option("input", help="simplicial-set JSON file")
    @option("--source", help="first vertex (default: the base vertex)")
    @option("--target", help="last vertex (default: the source)")
    @cutoff_options
    def rigidify(self, args: Namespace) -> RunReport:
        """Λ(S)(x, y) truncated at N and L, with its homology through the exact range

        :param source: Vertex the paths start at
        :param target: Vertex the paths end at
        """

        S, sha = load_simplicial(args.input)
        ring, N, L = resolve_cutoffs(args, rigidify_service.has_edge_cycle(S))
        x = args.source or S.base_vertex
        y = args.target or x
        M = rigidify_service.mapping_complex(S, x, y, N, L, ring)
        exact = max(rigidify_service.exact_degree(S, N, L), 0)
        truncated = L is not None and bool(S.nondegenerate(1))
        report = linalg_service.homology(M.complex, exact, truncated)

        print(f"{M.name} over {ring}: basis sizes {M.complex.ranks()}")
        for n in range(min(N, 2) + 1):
            words = M.words(n)
            shown = ", ".join(map(str, words[:8])) + (", ..." if len(words) > 8 else "")
            print(f"  degree {n}: {shown or '-'}")
        print()
        print(homology_table(report))

        results = {
            "name": M.name,
            "source": x,
            "target": y,
            "basis_sizes": M.complex.ranks(),
            "exact_through": exact,
            "homology": report.to_dict(),
        }
        return RunReport("rigidify", sha, cutoffs(N, L, source=x, target=y), str(ring), results)
