import argparse
import json
import logging
import sys
import time
import traceback

from datetime import timedelta
from typing import List, Optional

from humanize import precisedelta

from commands import Cobar, Hochschild, Homology, Loop, Pi1Algebra, Rigidify, Verify
from model import RunReport
from utils import Cog, register_options
from utils.config import cfg
from utils.enums import ExitCode
from utils.errors import CobarlabError
from utils.startup_checks import checks

logger = logging.getLogger("cobarlab")


class Application:
    """Argument parser holding one subcommand per registered cog command"""

    def __init__(self) -> None:
        self.parser = argparse.ArgumentParser(
            prog="cobarlab",
            description="Finite computations with the cobar construction, necklaces and rigidification")
        self.subparsers = self.parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
        self.cogs: List[Cog] = []

    def add_cog(self, cog: Cog) -> None:
        self.cogs.append(cog)
        for attr in dir(cog):
            func = getattr(cog, attr)
            name = getattr(func, "__command_name__", None)
            if name is None:
                continue
            sub = self.subparsers.add_parser(name, help=func.__command_help__, description=func.__command_help__)
            register_options(sub, func)
            sub.set_defaults(handler=func)


def build_parser() -> argparse.ArgumentParser:
    app = Application()
    for cog in (Homology, Loop, Cobar, Rigidify, Pi1Algebra, Hochschild, Verify):
        app.add_cog(cog(app))
    return app.parser


def write_report(report: RunReport, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(include_timing=cfg.report_timing), f, sort_keys=True, indent=2)
        f.write("\n")


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=cfg.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        for check in checks:
            check()
    except AttributeError as e:
        print(f"error: {e}", file=sys.stderr)
        return ExitCode.INPUT_ERROR

    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        report: RunReport = args.handler(args)
    except CobarlabError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except Exception:
        traceback.print_exc()
        return ExitCode.FAILURE

    report.wall_time = time.perf_counter() - started
    elapsed = precisedelta(timedelta(seconds=report.wall_time), minimum_unit="milliseconds")
    print(f"\n{args.command} finished in {elapsed}")
    logger.info("%s wrote %d verdicts", args.command, len(report.verdicts))
    if getattr(args, "json_path", None):
        try:
            write_report(report, args.json_path)
        except OSError as e:
            print(f"error: cannot write {args.json_path}: {e.strerror}", file=sys.stderr)
            return ExitCode.INPUT_ERROR
    return ExitCode.PASS if report.passed else ExitCode.FAILURE
