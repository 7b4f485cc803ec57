"""Render every catalogue entry up to a crossing bound as SVG."""

import argparse
import re
from pathlib import Path

from translinks.catalogue import enumerate_catalogue
from translinks.render import render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-crossings", type=int, default=24)
    ap.add_argument("--out", type=Path, default=Path("figures"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for e in enumerate_catalogue(args.max_crossings):
        slug = re.sub(r"[^A-Za-z0-9]+", "_", e.name).strip("_")
        path = render_svg(e.diagram, args.out / f"{e.crossings:02d}_{slug}.svg")
        print(path)


if __name__ == "__main__":
    main()
