"""Freeze the worked-example prompt renderings into tests/golden_prompts/.

Run from the repo root after any intentional template change, then review
the diffs by eye before committing.
"""
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from golden_cases import all_cases, render_case  # noqa: E402

from morphsuite.prompts import load_templates  # noqa: E402

OUT = ROOT / "tests" / "golden_prompts"


def main():
    catalog = load_templates()
    OUT.mkdir(parents=True, exist_ok=True)
    for case in all_cases():
        (OUT / f"{case.name}.txt").write_text(
            render_case(case, catalog), encoding="utf-8"
        )
    print(f"wrote {len(all_cases())} golden prompts to {OUT}")


if __name__ == "__main__":
    main()
