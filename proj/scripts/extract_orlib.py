#!/usr/bin/env python3
"""Split an OR-Library job-shop "bank" file into single-instance files.

The classical bank format (e.g. jobshop1.txt) concatenates instances:

    +++++++++++++++++++++++++++++
     instance la01
    +++++++++++++++++++++++++++++
     Lawrence 10x5 instance (Table 3, instance 1); also called (setf1) or (F1)
     10 5
      1 21  0 53  4 95  3 55  2 34
      ...

Each extracted file keeps only the header line "n m" and the n job rows,
which is the single-instance format the solver's parser reads.

Usage: extract_orlib.py BANKFILE [OUTDIR]
"""
import re
import sys
from pathlib import Path


def split_bank(text: str):
    lines = text.splitlines()
    i = 0
    while i < len(lines):
        m = re.match(r"\s*instance\s+(\S+)", lines[i])
        if not m:
            i += 1
            continue
        name = m.group(1)
        i += 1
        # Skip separator/description lines until the "n m" header.
        header = None
        while i < len(lines):
            toks = lines[i].split()
            if len(toks) == 2 and all(t.isdigit() for t in toks):
                header = (int(toks[0]), int(toks[1]))
                i += 1
                break
            i += 1
        if header is None:
            raise ValueError(f"{name}: no 'n m' header found")
        n, mch = header
        rows = []
        while i < len(lines) and len(rows) < n:
            toks = lines[i].split()
            if toks and all(re.fullmatch(r"-?\d+", t) for t in toks):
                if len(toks) != 2 * mch:
                    raise ValueError(f"{name}: row {len(rows)} has {len(toks)} tokens, want {2 * mch}")
                rows.append(" ".join(toks))
            i += 1
        if len(rows) != n:
            raise ValueError(f"{name}: found {len(rows)} rows, want {n}")
        yield name, f"{n} {mch}\n" + "\n".join(rows) + "\n"


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__, file=sys.stderr)
        return 1
    bank = Path(sys.argv[1]).read_text()
    outdir = Path(sys.argv[2] if len(sys.argv) > 2 else ".")
    outdir.mkdir(parents=True, exist_ok=True)
    count = 0
    for name, body in split_bank(bank):
        (outdir / f"{name}.txt").write_text(body)
        count += 1
    print(f"extracted {count} instances to {outdir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
