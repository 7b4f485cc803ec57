"""Periodicity and transitivity screens over torus links T(2,k) and small catalogue links.

Prints one verdict grid per screen.  A fail refutes the property; a pass
is only a necessary condition.
"""

import argparse

from translinks.catalogue import enumerate_catalogue
from translinks.congruence import periodicity_screen, transitivity_screen
from translinks.linkdiag import BraidWord, closure, unknot

PRIMES = (2, 3, 5, 7, 11)


def grid(title, rows, fn, levels):
    print(f"\n{title}")
    print(f"{'link':<26}" + "".join(f"  p={p:<2}" + "".join(f" n{n}" for n in levels) for p in PRIMES))
    for name, d in rows:
        line = f"{name:<26}"
        for p in PRIMES:
            line += "      " + "".join("  +" if fn(d, p, n).passed else "  -" for n in levels)
        print(line)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=9)
    ap.add_argument("--levels", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()

    torus = [(f"T(2,{k})", closure(BraidWord(2, (1,) * k))) for k in range(3, args.max_k + 1, 2)]
    grid("p-periodicity with unknot factor (+ pass, - refuted)", torus,
         lambda d, p, n: periodicity_screen(d, unknot(), p, n), args.levels)
    small = [(e.name, e.diagram) for e in enumerate_catalogue(9) if e.components == 1 and e.crossings > 1]
    grid("transitivity with m := p (+ pass, - refuted)", small,
         lambda d, p, n: transitivity_screen(d, p, n), args.levels)


if __name__ == "__main__":
    main()
