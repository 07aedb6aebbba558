#!/usr/bin/env python3
"""Regenerate the derived reference tables under data/.

  data/max_code_sizes_t1.csv      exact largest single-grain-correcting
                                  code sizes (independence-number search)
  data/clique_partition_sizes.csv greedy clique-partition sizes, m <= 12

Both files are frozen outputs of this script; the acceptance suite
recomputes the values and cross-checks them against these files.
"""

from pathlib import Path

from grainlab.graph import max_code_size, partition_size_table

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    data = ROOT / "data"
    data.mkdir(exist_ok=True)

    lines = ["n,max_code_size"]
    for n in range(2, 9):
        result = max_code_size(n, 1)
        assert result.exact
        lines.append(f"{n},{result.size}")
    lines.append("# exact values from the branch-and-bound search (t = 1)")
    (data / "max_code_sizes_t1.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {data / 'max_code_sizes_t1.csv'}")

    rows = partition_size_table(range(2, 13), range(1, 5))
    lines = ["m,s,parts"]
    lines.extend(f"{m},{s},{parts}" for m, s, parts in rows)
    lines.append("# greedy clique-partition sizes (lex-smallest tie-break)")
    (data / "clique_partition_sizes.csv").write_text("\n".join(lines) + "\n")
    print(f"wrote {data / 'clique_partition_sizes.csv'}")


if __name__ == "__main__":
    main()
