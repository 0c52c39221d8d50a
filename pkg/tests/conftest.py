from __future__ import annotations

import os

from rotoblur.cli import main

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def run_cli(argv: list[str]) -> int:
    """Invoke the CLI, folding argparse's SystemExit into a return code."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code)
