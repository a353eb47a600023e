from argparse import Namespace

from model import Ring, RunReport
from utils import Cog, command, option
from utils.config import cfg
from utils.errors import ConnectivityError
from utils.services import cobar_service

from .common import load_simplicial


class Pi1Algebra(Cog):
    @command("pi1-algebra", "Presentation of H0 of the loop space model and a bounded dimension probe")
    @option("input", help="simplicial-set JSON file with a single vertex")
    @option("--ring", default=cfg.ring, help="coefficient ring of the presentation")
    @option("--probe-length", type=int, default=4, dest="probe_length",
            help="longest word the dimension probe looks at")
    @option("--json", dest="json_path", metavar="PATH", help="write the machine-readable report here")
    def pi1_algebra(self, args: Namespace) -> RunReport:
        S, sha = load_simplicial(args.input)
        if not S.is_one_vertex():
            ConnectivityError.throw_one_vertex(S.name, len(S.vertices))
        ring = Ring.parse(args.ring)
        P = cobar_service.h0_presentation(S, ring)
        probe = cobar_service.dimension_probe(P, max(args.probe_length, 0))

        print(P)
        print(f"dimension through words of length {probe.length}: {probe.dimension}"
              f"{' (stable)' if probe.stable else ' (still growing)'}")
        if not P.relations and P.generators:
            print("no relations: the edges are not inverted, H0 is a free algebra rather than a group ring")

        results = {"presentation": P.to_dict(), "probe": probe.to_dict()}
        return RunReport("pi1-algebra", sha, {"probe_length": probe.length}, str(ring), results)
