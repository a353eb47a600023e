from argparse import Namespace

from model import RunReport
from utils import Cog, command, option
from utils.errors import ConnectivityError
from utils.services import cobar_service, hochschild_service, rigidify_service, simplicial_service

from .common import cutoff_options, cutoffs, homology_table, load_simplicial, resolve_cutoffs


class Hochschild(Cog):
    @command("hochschild", "coHochschild chains of the chains and Hochschild chains of the cobar construction")
    @option("input", help="simplicial-set JSON file with a single vertex")
    @cutoff_options
    def hochschild(self, args: Namespace) -> RunReport:
        S, sha = load_simplicial(args.input)
        if not S.is_one_vertex():
            ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
        ring, N, L = resolve_cutoffs(args, rigidify_service.has_edge_cycle(S))
        C = simplicial_service.aw_coalgebra(S, N + 1, ring)
        co = hochschild_service.cohochschild(C, N, L)
        ch = hochschild_service.hochschild(cobar_service.cobar(C, N, L), N, L)

        for title, report in (("coHochschild", co), ("Hochschild", ch)):
            print(f"{title} chains of {S.name} over {ring}: basis sizes {report.complex.ranks()}, "
                  f"exact through degree {report.exact_through}")
            print(homology_table(report.homology))
            print()
        k = min(co.exact_through, ch.exact_through) + 1
        agree = co.homology.betti[:k] == ch.homology.betti[:k]
        print(f"ranks agree in the exact range: {'yes' if agree else 'no'}")

        results = {"name": S.name, "cohochschild": co.to_dict(), "hochschild": ch.to_dict(), "ranks_agree": agree}
        return RunReport("hochschild", sha, cutoffs(N, L), str(ring), results)
