"""Rewrite the golden phase grids from the exact walk engine.

Run from the repository root: ``python3 tests/golden/regenerate.py``.
"""
from pathlib import Path

from grover_support.lineqw import pattern

HERE = Path(__file__).parent
GRIDS = [(20, 100), (10, 60), (3, 60)]


def main() -> None:
    for k, n in GRIDS:
        (HERE / f"phases_k{k}_n{n}.txt").write_text(pattern(k, n).to_ascii())


if __name__ == "__main__":
    main()
