"""Command-line interface.

Exit status: 0 success, 1 semantic failure (mismatch, invalid, not
isomorphic), 2 usage or parse error, 3 resource cap, 4 I/O error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import count
from .canonical import encode, encode_full, full_from_explicit
from .core import to_explicit
from .enumeration import DEFAULT_CAP, enum_full, enum_rooted
from .errors import InvalidStructureError, ParseError, ResourceLimitError
from .formats import format_edgelist, parse_edgelist, to_dot
from .validate import check_theorem1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP, EXIT_IO = 0, 1, 2, 3, 4

EXTENSIONS = {"canon": "txt", "dot": "dot", "edgelist": "reeb"}


def _kind_flags(p, default="rooted"):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--rooted", dest="kind", action="store_const", const="rooted")
    group.add_argument("--full", dest="kind", action="store_const", const="full")
    p.set_defaults(kind=default)


def _natural(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="reebrp2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print K(k) or N(k) for k up to --max-saddles")
    p.add_argument("--max-saddles", type=_natural, required=True)
    _kind_flags(p)
    p.add_argument("--json", action="store_true", help="emit a JSON document instead of k<TAB>value lines")

    p = sub.add_parser("enumerate", help="write every graph with the given saddle count")
    p.add_argument("--saddles", type=_natural, required=True)
    _kind_flags(p)
    p.add_argument("--format", choices=sorted(EXTENSIONS), default="canon")
    p.add_argument("--out-dir", type=Path, help="write one file per graph plus manifest.txt; default: stdout")
    p.add_argument("--cap", type=_natural, default=DEFAULT_CAP)

    p = sub.add_parser("verify", help="cross-check the recurrences against exhaustive enumeration")
    p.add_argument("--max-saddles", type=_natural, required=True)
    p.add_argument("--rooted-limit", type=_natural, default=8)
    p.add_argument("--full-limit", type=_natural, default=9)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("check", help="validate an edge-list file")
    p.add_argument("file", type=Path)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("iso", help="decide whether two edge-list files are isomorphic")
    p.add_argument("file1", type=Path)
    p.add_argument("file2", type=Path)
    return parser


def cmd_count(args, out, err):
    if args.kind == "full" and args.max_saddles < 1:
        err.write("error: --full needs --max-saddles >= 1\n")
        return EXIT_USAGE
    rows = count.table(args.max_saddles, args.kind)
    notes = {k: count.erratum(args.kind, k) for k, _ in rows}
    if args.json:
        doc = {
            "format": "reeb v1",
            "kind": args.kind,
            "values": [
                {"k": k, "value": v, **({"erratum": notes[k]} if notes[k] else {})} for k, v in rows
            ],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for k, v in rows:
            out.write(f"{k}\t{v}\n")
        for k, note in notes.items():
            if note:
                err.write(f"# erratum: {note}\n")
    return EXIT_OK


def _stream(kind, k, cap):
    return enum_rooted(k, cap) if kind == "rooted" else enum_full(k, cap)


def _render(obj, fmt, index):
    code = encode(obj)
    if fmt == "canon":
        return code + "\n"
    g = to_explicit(obj)
    if fmt == "dot":
        return to_dot(g, name=f"g{index}", label=code)
    return format_edgelist(g, comments=[f"canon {code}"])


def file_name(index, code, width, fmt):
    digest = hashlib.sha256(code.encode("ascii")).hexdigest()[:12]
    return f"{index:0{width}d}_{digest}.{EXTENSIONS[fmt]}"


def cmd_enumerate(args, out, err):
    if args.kind == "full" and args.saddles < 1:
        err.write("error: --full needs --saddles >= 1\n")
        return EXIT_USAGE
    try:
        stream = _stream(args.kind, args.saddles, args.cap)
    except ResourceLimitError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_CAP
    if args.out_dir is None:
        for i, obj in enumerate(stream):
            out.write(_render(obj, args.format, i))
        return EXIT_OK
    total = count.K(args.saddles) if args.kind == "rooted" else count.N(args.saddles)
    width = max(1, len(str(total - 1)))
    codes = []
    try:
        args.out_dir.mkdir(parents=True, exist_ok=True)
        for i, obj in enumerate(stream):
            code = encode(obj)
            codes.append(code)
            (args.out_dir / file_name(i, code, width, args.format)).write_text(_render(obj, args.format, i))
        # Manifest last: its presence marks a complete run.
        (args.out_dir / "manifest.txt").write_text("".join(c + "\n" for c in codes))
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_IO
    err.write(f"wrote {len(codes)} graphs to {args.out_dir}\n")
    return EXIT_OK


def cmd_verify(args, out, err):
    if args.max_saddles > max(args.rooted_limit, args.full_limit):
        err.write(
            f"error: --max-saddles {args.max_saddles} exceeds limits "
            f"(rooted {args.rooted_limit}, full {args.full_limit})\n"
        )
        return EXIT_CAP
    ok = True
    out.write("kind\tk\tformula\tenumerated\tstatus\n")
    for k in range(args.max_saddles + 1):
        if k <= args.rooted_limit:
            formula = count.K(k) + (1 if args.inject_fault else 0)
            n_enum = sum(1 for _ in enum_rooted(k, cap=None))
            status = "match" if formula == n_enum else "MISMATCH"
            ok &= status == "match"
            out.write(f"rooted\t{k}\t{formula}\t{n_enum}\t{status}\n")
        if 1 <= k <= args.full_limit:
            formula = count.N(k)
            n_enum = invalid = 0
            for g in enum_full(k, cap=None):
                n_enum += 1
                if not check_theorem1(to_explicit(g)).is_valid:
                    invalid += 1
            status = "match" if formula == n_enum else "MISMATCH"
            if invalid:
                status += f" ({invalid} invalid)"
            ok &= status == "match"
            out.write(f"full\t{k}\t{formula}\t{n_enum}\t{status}\n")
            note = count.erratum("full", k)
            if note:
                out.write(f"# erratum: {note}\n")
    out.write("all match\n" if ok else "verification FAILED\n")
    return EXIT_OK if ok else EXIT_FAIL


def _load(path, err):
    try:
        text = path.read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        err.write(f"error: cannot read {path}: {exc}\n")
        return None, EXIT_IO
    try:
        return parse_edgelist(text), None
    except ParseError as exc:
        err.write(f"{path}:{exc.line}:{exc.column}: {exc.message}\n")
        return None, EXIT_USAGE


def cmd_check(args, out, err):
    g, status = _load(args.file, err)
    if g is None:
        return status
    report = check_theorem1(g)
    canon = encode_full(full_from_explicit(g)) if report.is_valid else None
    if args.json:
        doc = report.to_dict()
        doc["canon"] = canon
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(report.to_text())
        if canon is not None:
            out.write(f"canon {canon}\n")
    return EXIT_OK if report.is_valid else EXIT_FAIL


def cmd_iso(args, out, err):
    graphs = []
    for path in (args.file1, args.file2):
        g, status = _load(path, err)
        if g is None:
            return status
        graphs.append((path, g))
    codes = []
    for path, g in graphs:
        try:
            codes.append(encode_full(full_from_explicit(g)))
        except InvalidStructureError as exc:
            err.write(f"{path}: {exc}\n")
            err.write(exc.report.to_text())
            return EXIT_FAIL
    if codes[0] == codes[1]:
        out.write("isomorphic\n")
        return EXIT_OK
    out.write("not-isomorphic\n")
    return EXIT_FAIL


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "check": cmd_check,
    "iso": cmd_iso,
}


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return COMMANDS[args.command](args, out, err)


if __name__ == "__main__":
    sys.exit(main())
