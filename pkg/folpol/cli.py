# folpol/cli.py
"""
Command Line - Argument parsing, dispatch and report printing
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, TextIO

import structlog

from folpol import __version__
from folpol.core.exceptions import FolpolException, InvalidInput
from folpol.domain.models import COMMANDS, EngineOptions, RunRequest
from folpol.domain.validators import build_document
from folpol.services.invariant_service import InvariantService
from folpol.utils.response_builder import ResponseBuilder
from folpol.utils.serialization import dumps, render_text

logger = structlog.get_logger("cli")

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


class _Parser(argparse.ArgumentParser):
    """Usage errors become InvalidInput reports instead of exiting."""

    def error(self, message: str):
        raise InvalidInput(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="folpol", description="Exact invariants of plane foliation singularities")
    parser.add_argument("--version", action="version", version=f"folpol {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    for command in COMMANDS:
        cmd = sub.add_parser(command, help=f"run {command}")
        cmd.add_argument("form", nargs="?", help='1-form such as "x dy - y dx"; "-" reads stdin, "@path" reads a file')
        cmd.add_argument("--curve", action="append", default=[], help="curve polynomial (repeatable)")
        cmd.add_argument("--example", help="catalogue entry supplying the form and curves")
        cmd.add_argument("--alpha", help="pencil parameter such as 2 or (1 + j)/2")
        cmd.add_argument("--lines", type=int, nargs="+", help="branch counts for the radial local terms")
        cmd.add_argument("--trunc", type=int, help="fixed truncation order (adaptive by default)")
        cmd.add_argument("--max-blowups", type=int, help="blow-up ceiling (default 64)")
        cmd.add_argument("--seed", type=int, help="seed of the generic samples (default 0)")
        cmd.add_argument("--chart", choices=["z", "x", "y"], default="z", help="chart of the input form and curves")
        cmd.add_argument("--workers", type=int, help="threads for per-point projective analyses")
        output = cmd.add_mutually_exclusive_group()
        output.add_argument("--json", dest="text", action="store_false", default=False, help="JSON report (default)")
        output.add_argument("--text", dest="text", action="store_true", help="indented text report")

    serve = sub.add_parser("serve", help="start the HTTP surface")
    serve.add_argument("--host")
    serve.add_argument("--port", type=int)
    return parser


def read_form(value: Optional[str], stdin: TextIO) -> Optional[str]:
    if value == "-":
        return stdin.read()
    if value and value.startswith("@"):
        path = Path(value[1:])
        if not path.is_file():
            raise InvalidInput(f"no such file: {path}")
        return path.read_text(encoding="utf-8")
    return value


def request_from_args(args: argparse.Namespace, stdin: TextIO) -> RunRequest:
    options = EngineOptions(
        trunc=args.trunc,
        max_blowups=args.max_blowups,
        seed=args.seed,
        chart=args.chart,
        workers=args.workers,
    )
    extra = {"lines": args.lines} if args.lines else {}
    return RunRequest(
        form=read_form(args.form, stdin),
        curves=args.curve,
        example=args.example,
        alpha=args.alpha,
        options=options,
        **extra,
    )


def serve(host: Optional[str] = None, port: Optional[int] = None) -> int:
    import uvicorn

    from folpol.api.main import app
    from folpol.core.config import settings

    uvicorn.run(
        app,
        host=host or settings.HOST,
        port=port or settings.PORT,
        log_level=settings.LOG_LEVEL.lower(),
        access_log=False,
    )
    return EXIT_OK


def main(argv: Optional[List[str]] = None, stdout: TextIO = sys.stdout, stdin: TextIO = sys.stdin) -> int:
    """
    Run the command line.

    Returns:
        0 on success, 1 on a mathematical error, 2 on a usage or parse error
    """
    text = "--text" in (argv if argv is not None else sys.argv[1:])
    command = None
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        if command is None:
            raise InvalidInput("a command is required", details={"commands": list(COMMANDS) + ["serve"]})
        if command == "serve":
            return serve(args.host, args.port)

        document = build_document(request_from_args(args, stdin))
        result = InvariantService(document).run(command)
        report = ResponseBuilder.ok(
            command,
            result["data"],
            meta={"field": result["field"], "duration_ms": result["duration_ms"], "input": document.to_dict()},
        )
        code = EXIT_OK
    except FolpolException as exc:
        report = ResponseBuilder.from_exception(exc, command)
        code = exc.exit_code
    except ValueError as exc:
        # pydantic validation of the options
        report = ResponseBuilder.error("INVALID_INPUT", str(exc), command=command)
        code = EXIT_USAGE

    stdout.write((render_text(report) if text else dumps(report)) + "\n")
    return code
