from argparse import Namespace

from model import RunReport
from utils import Cog, command, format_table, option
from utils.errors import ConnectivityError
from utils.services import cobar_service, linalg_service, rigidify_service, simplicial_service

from .common import cutoff_options, cutoffs, homology_table, load_simplicial, resolve_cutoffs


def render(poly) -> str:
    if not poly:
        return "0"
    terms = []
    for word, c in sorted(poly.items(), key=lambda t: (len(t[0]), t[0])):
        body = "·".join(word) or "1"
        terms.append(body if c == 1 else f"-{body}" if c == -1 else f"{c}{body}")
    return " + ".join(terms).replace("+ -", "- ")


class Cobar(Cog):
    @command("cobar", "Cobar construction on the Alexander-Whitney chains of a one-vertex simplicial set")
    @option("input", help="simplicial-set JSON file with a single vertex")
    @cutoff_options
    def cobar(self, args: Namespace) -> RunReport:
        S, sha = load_simplicial(args.input)
        if not S.is_one_vertex():
            ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
        ring, N, L = resolve_cutoffs(args, rigidify_service.has_edge_cycle(S))
        A = cobar_service.cobar(simplicial_service.aw_coalgebra(S, N + 1, ring), N, L)
        complex = cobar_service.dga_complex(A)
        exact = max(cobar_service.exact_degree(A, N, L), 0)
        report = linalg_service.homology(complex, exact, A.has_degree_zero_generators)

        generators = sorted(A.generators, key=lambda g: (A.generators[g], g))
        rows = [(g, A.generators[g], render(A.differential.get(g, {}))) for g in generators]
        print(f"{A.name} over {ring}: {len(generators)} generators, basis sizes {complex.ranks()}")
        print(format_table(("generator", "degree", "D"), rows))
        print()
        print(homology_table(report))

        results = {
            "name": A.name,
            "generators": [{"label": g, "degree": d, "differential": D} for g, d, D in rows],
            "basis_sizes": complex.ranks(),
            "exact_through": exact,
            "homology": report.to_dict(),
        }
        return RunReport("cobar", sha, cutoffs(N, L), str(ring), results)
