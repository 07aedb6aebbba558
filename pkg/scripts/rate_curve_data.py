#!/usr/bin/env python3
"""Emit the asymptotic rate-bound curves (CSV + SVG) for tau in (0, 1/2].

Equivalent to:
    grainlab fig1 --tau-grid 0.002:0.5:0.002 --out out/fig1.csv --svg out/fig1.svg
"""

from pathlib import Path

from grainlab.cli import main as cli_main

OUT = Path(__file__).resolve().parent.parent / "out"


def main() -> None:
    OUT.mkdir(exist_ok=True)
    rc = cli_main(
        [
            "fig1",
            "--tau-grid", "0.002:0.5:0.002",
            "--out", str(OUT / "fig1.csv"),
            "--svg", str(OUT / "fig1.svg"),
        ]
    )
    raise SystemExit(rc)


if __name__ == "__main__":
    main()
