"""Build the catalogue up to a crossing bound and tabulate P_2 where evaluable.

    python3 scripts/build_catalogue.py --max-crossings 12 --out results/catalogue.json
"""

import argparse
import json
import time
from pathlib import Path

from translinks.catalogue import enumerate_catalogue
from translinks.linkdiag import is_positive_transitive_diagram, is_transitive_diagram
from translinks.skein import homfly_pn


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-crossings", type=int, default=12)
    ap.add_argument("--pn", type=int, default=2, help="level of the invariant to tabulate")
    ap.add_argument("--eval-limit", type=int, default=12, help="skip P_n above this crossing count")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    rows = []
    for e in enumerate_catalogue(args.max_crossings):
        t0 = time.perf_counter()
        row = e.to_json_obj()
        row["transitive"] = is_transitive_diagram(e.diagram)
        row["positive_transitive"] = is_positive_transitive_diagram(e.diagram)
        if e.crossings <= args.eval_limit:
            row[f"P{args.pn}"] = homfly_pn(e.diagram, args.pn).to_json_obj()
        row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
        print(f"{e.crossings:>3} {e.components:>3}  {e.name:<28} transitive={row['transitive']!s:<5} "
              f"positive={row['positive_transitive']!s:<5} {row['seconds']:.2f}s")
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(json.dumps(rows, indent=1))
        print(f"wrote {len(rows)} entries to {args.out}")


if __name__ == "__main__":
    main()
