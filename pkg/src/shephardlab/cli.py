"""Command-line interface.

    shephard-lab list [--family F]
    shephard-lab verify <key> [--check ID|all] [--stretch] [--seed N]
                        [--format text|json] [--out PATH] [--timing]
    shephard-lab export-complex <key> --out PATH [--stretch]
    shephard-lab --list-checks

Exit status is 0 iff every selected check passed (skipped checks do not
fail the run); usage and lookup errors exit 2.

The complex export is line oriented:

    complex-export 1
    group <name>
    rank <l>
    vertex <id> color <generator index> coset <parabolic coset id>
    cell <dim> <id> <vertex id> ... <vertex id>
    boundary <dim> <cell id> <face id>:<sign> ...

Vertices are the dimension-0 cells; ids count from 0 within each dimension;
cell vertex lists are in color order, matching the boundary signs
(-1)^position.
"""

import argparse
import sys

from . import catalog
from . import checks
from . import complexes
from . import reports
from .groups import generate_group, GroupTooLarge
from .symbols import SymbolError


def cmd_list(args):
    rows = []
    for name in catalog.available():
        meta = catalog.entry_metadata(name)
        if args.family and meta["family"] != args.family:
            continue
        rows.append((name, meta["symbol"], meta["order"],
                     ",".join(str(d) for d in meta["degrees"]),
                     "stretch" if meta["stretch"] else ""))
    if not rows:
        return 0
    widths = [max(len(str(r[i])) for r in rows) for i in range(4)]
    for r in rows:
        print("%-*s  %-*s  order %*d  degrees %-*s  %s"
              % (widths[0], r[0], widths[1], r[1], widths[2], r[2],
                 widths[3], r[3], r[4]))
    return 0


def _lookup_or_report(key):
    """Resolve a catalog key, printing a diagnostic and returning None on
    failure; a syntactically invalid symbol is reported as a parse error."""
    try:
        return catalog.catalog_lookup(key)
    except catalog.UnknownGroup as exc:
        try:
            from .symbols import parse_symbol
            parse_symbol(key)
        except SymbolError as parse_exc:
            print("error: cannot parse %r: %s" % (key, parse_exc),
                  file=sys.stderr)
            return None
        print("error: %s" % exc, file=sys.stderr)
        return None


def cmd_verify(args):
    spec = _lookup_or_report(args.key)
    if spec is None:
        return 2
    if spec.stretch and not args.stretch:
        print("error: %r is a stretch entry; pass --stretch to run its "
              "complex-side checks" % spec.name, file=sys.stderr)
        return 2
    try:
        selected = checks.resolve_selector(args.check)
    except checks.UnknownCheck as exc:
        print("error: %s" % exc.args[0], file=sys.stderr)
        return 2
    try:
        report = checks.run_checks(spec.name, selected, seed=args.seed,
                                   timing=args.timing)
    except GroupTooLarge as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    out = (reports.render_json(report) if args.format == "json"
           else reports.render_text(report))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0 if report.overall == "pass" else 1


def export_complex(complex_, fh):
    fh.write("complex-export 1\n")
    fh.write("group %s\n" % complex_.group.spec.name)
    fh.write("rank %d\n" % complex_.group.rank)
    for vid, (J, cid) in enumerate(complex_.cells_by_dim[0]):
        fh.write("vertex %d color %d coset %d\n"
                 % (vid, complex_.vertex_color((J, cid)), cid))
    for dim, cells in enumerate(complex_.cells_by_dim):
        for pos, (J, cid) in enumerate(cells):
            verts = complex_.cell_vertices(J, cid)
            fh.write("cell %d %d %s\n"
                     % (dim, pos, " ".join(str(v) for v in verts)))
    bnd = complex_.boundaries
    for dim in range(1, len(bnd)):
        for pos, col in enumerate(bnd[dim]):
            entries = " ".join("%d:%d" % (r, col[r]) for r in sorted(col))
            fh.write("boundary %d %d %s\n" % (dim, pos, entries))


def cmd_export(args):
    spec = _lookup_or_report(args.key)
    if spec is None:
        return 2
    if spec.stretch and not args.stretch:
        print("error: %r is a stretch entry; pass --stretch to export its "
              "complex" % spec.name, file=sys.stderr)
        return 2
    complex_ = complexes.build_coset_complex(generate_group(spec))
    with open(args.out, "w") as fh:
        export_complex(complex_, fh)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="shephard-lab",
        description="Exact verification runs over a catalog of reflection "
                    "groups.")
    parser.add_argument("--list-checks", action="store_true",
                        help="print the known check ids and exit")
    sub = parser.add_subparsers(dest="command")

    p_list = sub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--family", choices=catalog.FAMILIES, default=None)

    p_verify = sub.add_parser("verify", help="run checks on one group")
    p_verify.add_argument("key", help="catalog name or alias")
    p_verify.add_argument("--check", default="default",
                          help="check id, id prefix, or 'all' "
                               "(default: all except shelling-st)")
    p_verify.add_argument("--stretch", action="store_true",
                          help="allow the large complex-only entries")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="tie-break seed for shelling-st")
    p_verify.add_argument("--format", choices=("text", "json"),
                          default="text")
    p_verify.add_argument("--out", default=None,
                          help="write the report to a file")
    p_verify.add_argument("--timing", action="store_true",
                          help="record wall times (JSON output is then no "
                               "longer byte-stable across runs)")

    p_export = sub.add_parser("export-complex",
                              help="write the coset complex as plain text")
    p_export.add_argument("key")
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--stretch", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_checks:
        for check_id in checks.CHECK_IDS:
            print(check_id)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "list":
            return cmd_list(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "export-complex":
            return cmd_export(args)
    except SymbolError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
