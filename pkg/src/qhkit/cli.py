"""qhkit <command> <file> [--emit json|text] [--seed N] [--degree-cap N]"""
from __future__ import annotations

import argparse
import sys

from .report import COMMANDS, EXIT_ERROR, render_json, render_text, run_command


def build_parser():
    p = argparse.ArgumentParser(
        prog="qhkit",
        description="Check ideal families of local self-injective algebras and the "
                    "1-quasi-hereditary algebras they produce.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("file", help="problem file (JSON)")
    p.add_argument("--emit", choices=("json", "text"), default=None,
                   help="output format (default: the file's option, else text)")
    p.add_argument("--seed", type=int, default=None,
                   help="recorded in the report; every stage is deterministic")
    p.add_argument("--degree-cap", type=int, default=None,
                   help="path length cap for relation extraction")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.degree_cap is not None and args.degree_cap < 1:
        print("qhkit: --degree-cap must be positive", file=sys.stderr)
        return EXIT_ERROR
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        print(f"qhkit: cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    report, code = run_command(args.command, text, args.seed, args.degree_cap, args.emit)
    emit = report["provenance"]["options"].get("emit") or "text"
    sys.stdout.write(render_json(report) if emit == "json" else render_text(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
