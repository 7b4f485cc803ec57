"""Command-line driver: ``python3 -m translinks <command> ...``.

Exit codes: 0 on success, 2 on bad arguments (argparse), 1 on computation
errors, in which case stderr carries ``ErrorName: message``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .catalogue import enumerate_catalogue
from .config import DEFAULT_BUDGETS
from .congruence import periodicity_screen, run_batch, transitivity_screen
from .errors import BadParameter, IOFailure, InvalidDiagram, TranslinksError
from .linkdiag import (BraidWord, LinkDiagram, closure, crossing_orbits, diagram_symmetries,
                       from_map_with_seed)
from .planarmap import (double_all_edges, double_edge_orbit, edge_orbits, matching_orbits,
                        named_map, prism_rungs)
from .render import render_svg
from .skein import homfly_pn


def _dump(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=False) + "\n")


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IOFailure(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDiagram(f"{path}: {exc}") from exc


def _read_diagram(path: str) -> LinkDiagram:
    return LinkDiagram.from_json_obj(_read_json(path))


def cmd_catalogue(a) -> None:
    entries = enumerate_catalogue(a.max_crossings, mirrors=a.mirrors)
    if a.json:
        _dump([e.to_json_obj() for e in entries])
        return
    rows = [("crossings", "components", "family", "name", "note")]
    for e in entries:
        name = e.name + (" (mirror)" if e.mirror else "")
        note = e.note if e.evaluable else (e.note + "; " if e.note else "") + "not evaluable for P_n"
        rows.append((str(e.crossings), str(e.components), e.family, name, note))
    widths = [max(len(r[k]) for r in rows) for k in range(4)]
    for r in rows:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)) + "  " + r[4])


def _double(m, spec: str):
    if spec == "all":
        return double_all_edges(m)
    if spec == "matching":
        orbits = matching_orbits(m, max_darts=DEFAULT_BUDGETS.max_darts)
        if not orbits:
            raise BadParameter("no edge orbit is a perfect matching")
        orbit = orbits[0]
    elif spec == "rungs":
        if m.num_vertices % 2:
            raise BadParameter("rungs need a prism")
        orbit = prism_rungs(m.num_vertices // 2)
    else:
        try:
            k = int(spec)
        except ValueError as exc:
            raise BadParameter(f"unknown orbit {spec!r}") from exc
        orbits = edge_orbits(m, max_darts=DEFAULT_BUDGETS.max_darts)
        if not 0 <= k < len(orbits):
            raise BadParameter(f"orbit index {k} out of range 0..{len(orbits) - 1}")
        orbit = orbits[k]
    return double_edge_orbit(m, orbit, max_darts=DEFAULT_BUDGETS.max_darts)


def cmd_build(a) -> None:
    if a.braid is not None:
        d = closure(BraidWord.parse(a.braid, a.strands))
    else:
        m = named_map(a.map)
        if a.double is not None:
            m = _double(m, a.double)
        d = from_map_with_seed(m, a.seed_vertex, a.seed_pair, max_darts=DEFAULT_BUDGETS.max_darts)
    _dump(d.to_json_obj())


def cmd_invariant(a) -> None:
    d = _read_diagram(a.input)
    t0 = time.perf_counter()
    value = homfly_pn(d, a.pn, a.budget)
    if a.meta:
        _dump({"n": a.pn, "crossings": d.num_crossings,
               "elapsed": round(time.perf_counter() - t0, 6), "polynomial": value.to_json_obj()})
    else:
        _dump(value.to_json_obj())


def cmd_check_transitive(a) -> None:
    d = _read_diagram(a.input)
    group = diagram_symmetries(d, DEFAULT_BUDGETS.max_darts)
    if a.positive:
        group = [g for g in group if g.preserves_orientation]
    orbits = crossing_orbits(d, group)
    _dump({"crossings": d.num_crossings, "positive": a.positive,
           "transitive": len(orbits) <= 1, "symmetries": len(group), "orbits": orbits})


def cmd_screen(a) -> None:
    if a.batch is not None:
        jobs = _read_json(a.batch)
        if not isinstance(jobs, list):
            raise InvalidDiagram("batch file must hold a JSON array")
        if a.jobs > 1:
            with ProcessPoolExecutor(a.jobs) as pool:
                # map keeps input order, so output stays deterministic
                out = [r for chunk in pool.map(run_batch, [[j] for j in jobs]) for r in chunk]
        else:
            out = run_batch(jobs)
        _dump(out)
        return
    if a.input is None or a.pn is None:
        raise BadParameter("screen needs --pn and --in (or --batch)")
    d = _read_diagram(a.input)
    if a.period is not None:
        if a.factor is None:
            raise BadParameter("--period needs --factor")
        rep = periodicity_screen(d, _read_diagram(a.factor), a.period, a.pn, a.budget)
    elif a.transitive is not None:
        rep = transitivity_screen(d, a.transitive, a.pn, a.budget)
    else:
        raise BadParameter("screen needs --period or --transitive")
    _dump(rep.to_json_obj())


def cmd_render(a) -> None:
    path = render_svg(_read_diagram(a.input), a.out)
    _dump({"out": str(path)})


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="translinks", description="Transitive links toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalogue", help="list the transitive link catalogue")
    c.add_argument("--max-crossings", type=int, required=True)
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true")
    c.add_argument("--mirrors", action="store_true", help="also emit chiral mirror images")
    c.set_defaults(func=cmd_catalogue)

    b = sub.add_parser("build", help="build a diagram as PD JSON")
    src = b.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='braid word such as "1 -2 1 -2"')
    src.add_argument("--map", help="cube, cuboctahedron, prism:5, antiprism:4, ...")
    b.add_argument("--strands", type=int)
    b.add_argument("--double", metavar="ORBIT",
                   help="edge orbit to double: an index, 'matching', 'rungs' or 'all'")
    b.add_argument("--seed-vertex", type=int, default=0)
    b.add_argument("--seed-pair", type=int, default=0, choices=(0, 1))
    b.set_defaults(func=cmd_build)

    i = sub.add_parser("invariant", help="compute P_n")
    i.add_argument("--pn", type=int, required=True)
    i.add_argument("--in", dest="input", required=True)
    i.add_argument("--meta", action="store_true", help="wrap with n, crossings and elapsed time")
    i.add_argument("--budget", type=int, default=DEFAULT_BUDGETS.crossing_budget)
    i.set_defaults(func=cmd_invariant)

    t = sub.add_parser("check-transitive", help="brute-force crossing transitivity")
    t.add_argument("--in", dest="input", required=True)
    t.add_argument("--positive", action="store_true")
    t.set_defaults(func=cmd_check_transitive)

    s = sub.add_parser("screen", help="periodicity / transitivity congruence screens")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--period", type=int)
    mode.add_argument("--transitive", type=int, metavar="M")
    s.add_argument("--factor")
    s.add_argument("--pn", type=int)
    s.add_argument("--in", dest="input")
    s.add_argument("--batch", help="JSON array of {diagram, factor?, p, n} jobs")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGETS.crossing_budget)
    s.set_defaults(func=cmd_screen)

    r = sub.add_parser("render", help="draw a diagram as SVG")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=cmd_render)
    return p


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "build" and args.braid is not None and args.double is not None:
            parser.error("--double only applies to --map")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except (TranslinksError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if exc.args else ""
        sys.stderr.write(f"{type(exc).__name__}: {msg}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(cli_main())
