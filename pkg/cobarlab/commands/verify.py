from argparse import Namespace

from model import RunReport
from utils import Cog, command, option
from utils.enums import Suite
from utils.services import verify_service

from .common import verdict_table


class Verify(Cog):
    @command("verify", "Run the property suites")
    @option("--suite", default=Suite.ALL.value, choices=[s.value for s in Suite], help="suite to run (default all)")
    @option("--seed", type=int, default=0, help="seed of the random instances")
    @option("--json", dest="json_path", metavar="PATH", help="write the machine-readable report here")
    def verify(self, args: Namespace) -> RunReport:
        records = verify_service.run(Suite(args.suite), args.seed)
        print(verdict_table(records))
        failed = [r for r in records if not r.passed]
        print(f"\n{len(records) - len(failed)} of {len(records)} checks passed")
        return RunReport("verify", None, {"suite": args.suite, "seed": args.seed}, "Z", {}, records)
