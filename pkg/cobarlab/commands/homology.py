from argparse import Namespace

from model import CubicalSetFG, RunReport, SimplicialSet
from utils import Cog, command, option
from utils.enums import Provenance
from utils.errors import InputError
from utils.loaders import load
from utils.services import cubical_service, linalg_service, simplicial_service

from .common import cutoff_options, cutoffs, homology_table, resolve_cutoffs


class Homology(Cog):
    @command("homology", "Betti numbers and torsion of a simplicial or cubical set")
    @option("input", help="simplicial-set or cubical-set JSON file")
    @cutoff_options
    def homology(self, args: Namespace) -> RunReport:
        """Normalized chains of the input through degree N+1, homology through N or the top dimension."""

        structure, sha = load(args.input)
        ring, N, L = resolve_cutoffs(args)
        if L is not None:
            raise InputError("--max-length caps words of a loop space; simplicial and cubical chains have none",
                             args.input)
        if isinstance(structure, SimplicialSet):
            complex = simplicial_service.chains(structure, N + 1, ring)
            provenance = Provenance.SIMPLICIAL
        elif isinstance(structure, CubicalSetFG):
            complex = cubical_service.chains_cubical(structure, N + 1, ring)
            provenance = Provenance.CUBICAL
        else:
            raise InputError(f"'{structure.name}' is a dg category, homology needs a simplicial or cubical set",
                             args.input)
        report = linalg_service.homology(complex, min(N, max(structure.top_dim, 0)))

        print(f"{provenance} chains of {structure.name} over {ring}: basis sizes {complex.ranks()}")
        print(homology_table(report))
        results = {
            "name": structure.name,
            "provenance": str(provenance),
            "basis_sizes": complex.ranks(),
            "homology": report.to_dict(),
        }
        return RunReport("homology", sha, cutoffs(N, None), str(ring), results)
