#!/usr/bin/env python3
"""Regenerate src/builtin_instances.cpp from data/instances/*.txt.

Run from the repository root after changing any instance file:

    python3 scripts/gen_builtin_source.py
"""
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
SRC = ROOT / "data" / "instances"
OUT = ROOT / "src" / "builtin_instances.cpp"

HEADER = """\
// Generated by scripts/gen_builtin_source.py from data/instances/*.txt.
// Do not edit by hand; edit the data files and regenerate.

#include "jobshop/instance.hpp"

namespace jobshop::detail {

const BuiltinInstance kBuiltinInstances[] = {
"""

FOOTER = """\
};

const std::size_t kBuiltinInstanceCount =
    sizeof(kBuiltinInstances) / sizeof(kBuiltinInstances[0]);

}  // namespace jobshop::detail
"""


def main() -> None:
    files = sorted(SRC.glob("*.txt"))
    if not files:
        raise SystemExit(f"no instance files under {SRC}")
    parts = [HEADER]
    for i, path in enumerate(files):
        name = path.stem
        body = path.read_text()
        assert ")raw" not in body
        sep = ",\n" if i else ""
        parts.append(f'{sep}    {{"{name}", R"raw({body})raw"}}')
    parts.append("\n")
    parts.append(FOOTER)
    OUT.write_text("".join(parts))
    print(f"wrote {OUT} with {len(files)} instances")


if __name__ == "__main__":
    main()
