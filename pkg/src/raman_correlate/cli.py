"""``raman-correlate`` command-line entry point."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import parse_config
from .csvio import write_csv
from .errors import ConfigurationError, NumericalError, RamanError
from .runners import run_dynamics, run_polariton, run_validity, run_verify

EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL, EXIT_VERIFY = 0, 1, 2, 3

COMMANDS = {"dynamics": run_dynamics, "polariton": run_polariton, "validity": run_validity}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="raman-correlate", description="Stokes / anti-Stokes correlation simulations")
    p.add_argument("command", choices=[*COMMANDS, "verify"])
    p.add_argument("--config", required=True, type=Path, help="scenario file")
    p.add_argument("--out", type=Path, default=None, help="output file (default: standard output)")
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.config.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"raman-correlate: cannot read {args.config}: {exc.strerror}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        cfg = parse_config(text)
        if args.command == "verify":
            outcome = run_verify(cfg)
            _emit(outcome.report, args.out)
            return EXIT_OK if outcome.passed else EXIT_VERIFY
        write_csv(COMMANDS[args.command](cfg), args.out)
        return EXIT_OK
    except ConfigurationError as exc:
        print(f"raman-correlate: {args.config}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, ArithmeticError, MemoryError) as exc:
        print(f"raman-correlate: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except RamanError as exc:
        print(f"raman-correlate: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
