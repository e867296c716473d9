#!/usr/bin/env python3
"""Regenerate the expanded example3 corpus files from their construction.

Writes src/sds/corpus_data/example3-pK.txt for K = 1..6.  The files are
committed; this script exists so the stored expansions can be audited and
rebuilt from the documented construction in sds.corpus.
"""

from __future__ import annotations

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from sds.corpus import CORPUS_VARS, build_power_mean_gap  # noqa: E402


def main() -> None:
    out_dir = ROOT / "src" / "sds" / "corpus_data"
    out_dir.mkdir(parents=True, exist_ok=True)
    for p in range(1, 7):
        form = build_power_mean_gap(p)
        path = out_dir / f"example3-p{p}.txt"
        path.write_text(form.to_text(CORPUS_VARS) + "\n", encoding="utf-8")
        print(f"wrote {path} ({len(form.terms)} terms, degree {form.degree})")


if __name__ == "__main__":
    main()
