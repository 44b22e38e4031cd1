# main.py
"""
folpol - Main Entry Point
Exact invariants of plane foliation singularities: CLI and HTTP surface
"""

import sys

from folpol.cli import main as cli_main
from folpol.core.logging_config import setup_logging


def main() -> int:
    """Application entry point with proper initialization"""
    # Setup structured logging
    setup_logging()

    # Dispatch the command line (``serve`` starts uvicorn)
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
