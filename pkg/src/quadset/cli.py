"""Command-line front end.

Exit codes: 0 ok, 1 a requested property fails, 2 input error,
3 census consistency violation, 4 orbit cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import QuadraticSet, build_from_left_action, build_set, check_properties, left_action_of
from .errors import ConsistencyViolation, OrbitCapExceeded, QuadSetError
from .harness import LARGE_N, MAX_N, main_theorem_report, survey
from .presentations import find_skew_ordering, hilbert_dims, is_skew_type
from .words import DEFAULT_CAP, normal_form, orbit

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CONSISTENCY, EXIT_CAP = 0, 1, 2, 3, 4

REQUIRED_BY_DEFAULT = ("involutive", "nondegenerate", "square_free", "braided")


class DocumentError(QuadSetError, ValueError):
    pass


def parse_indices(text: str, what: str = "word") -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise DocumentError(f"{what} {text!r} is not a comma-separated list of indices") from None


def set_from_document(doc: dict) -> tuple[QuadraticSet, tuple[int, ...] | None, str | None]:
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")
    if "n" not in doc or not isinstance(doc["n"], int):
        raise DocumentError("field 'n' missing or not an integer")
    n = doc["n"]
    has_table, has_left = "r_table" in doc, "left_action" in doc
    if has_table == has_left:
        raise DocumentError("exactly one of 'r_table' or 'left_action' is required")
    if has_table:
        rows = doc["r_table"]
        if not isinstance(rows, list) or len(rows) != n * n:
            raise DocumentError(f"'r_table' must list {n * n} entries [x, y, u, v]")
        table = {}
        for i, row in enumerate(rows):
            if not (isinstance(row, list) and len(row) == 4):
                raise DocumentError(f"r_table[{i}] is not of the form [x, y, u, v]")
            x, y, u, v = row
            if (x, y) in table:
                raise DocumentError(f"r_table[{i}] repeats the pair ({x},{y})")
            table[(x, y)] = (u, v)
        s = build_set(n, table)
    else:
        s = build_from_left_action(n, doc["left_action"])
    ordering = None
    if doc.get("ordering") is not None:
        ordering = tuple(doc["ordering"])
        if sorted(ordering) != list(range(n)):
            raise DocumentError(f"'ordering' {list(ordering)} is not a permutation of 0..{n - 1}")
    return s, ordering, doc.get("name")


def load_document(path: str) -> tuple[QuadraticSet, tuple[int, ...] | None, str | None]:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"{path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return set_from_document(doc)


def set_document(s: QuadraticSet, name: str | None = None) -> dict:
    doc: dict = {}
    if name:
        doc["name"] = name
    doc["n"] = s.n
    la = left_action_of(s)
    if la is not None:
        doc["left_action"] = la
    else:
        doc["r_table"] = s.as_rows()
    return doc


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _word(w) -> str:
    return ",".join(map(str, w))


def cmd_check(args) -> int:
    s, doc_ordering, name = load_document(args.path)
    cap = args.max_orbit
    props = check_properties(s)
    out: dict = {"name": name, "n": s.n, "properties": props.as_dict()}
    out["properties"]["nondegenerate"] = props.nondegenerate
    out["properties"]["quantum_binomial"] = props.quantum_binomial
    ok = all(out["properties"][k] for k in REQUIRED_BY_DEFAULT)

    if args.skew:
        ordering = parse_indices(args.ordering, "ordering") if args.ordering else doc_ordering
        if ordering is None:
            ordering = find_skew_ordering(s, cap)
        if ordering is None:
            out["skew"] = {"ordering": None, "cond_i": False, "cond_ii": False, "cond_iii": False}
            ok = False
        else:
            if sorted(ordering) != list(range(s.n)):
                raise DocumentError(f"ordering {list(ordering)} is not a permutation of X")
            rep = is_skew_type(s, ordering, cap)
            out["skew"] = {
                "ordering": list(rep.ordering),
                "cond_i": rep.cond_i,
                "cond_ii": rep.cond_ii,
                "cond_iii": rep.cond_iii,
                "witness": repr(rep.witness) if rep.witness is not None else None,
            }
            ok = ok and rep.ok
    if args.theorem:
        if not (props.quantum_binomial and props.lri):
            out["theorem"] = None
            ok = False
        else:
            rep = main_theorem_report(s, cap)
            out["theorem"] = rep.as_dict()
            ok = ok and rep.consistent and rep.cond_ybe
    if args.degree is not None:
        out["hilbert_dims"] = hilbert_dims(s, args.degree, cap)

    if args.json:
        print(json.dumps(out, indent=2))
    else:
        _print_check(out)
    return EXIT_OK if ok else EXIT_FAIL


def _print_check(out: dict) -> None:
    title = out["name"] or "set"
    print(f"{title} (n={out['n']})")
    for key, val in out["properties"].items():
        if isinstance(val, bool):
            print(f"  {key:<20} {_fmt_bool(val)}")
    print(f"  {'fixed_points':<20} {' '.join(f'({a},{b})' for a, b in out['properties']['fixed_points'])}")
    print(f"  {'relation_count':<20} {out['properties']['relation_count']}")
    if "skew" in out:
        sk = out["skew"]
        order = _word(sk["ordering"]) if sk["ordering"] else "none found"
        print(f"skew type under {order}")
        for key in ("cond_i", "cond_ii", "cond_iii"):
            print(f"  {key:<20} {_fmt_bool(sk[key])}")
        if sk.get("witness"):
            print(f"  {'witness':<20} {sk['witness']}")
    if "theorem" in out:
        th = out["theorem"]
        if th is None:
            print("theorem: not applicable (needs a quantum binomial set with lri)")
        else:
            print("theorem")
            for key in ("regular_garside", "regular_quantum", "skew_type", "ybe", "consistent"):
                print(f"  {key:<20} {_fmt_bool(th[key])}")
    if "hilbert_dims" in out:
        print(f"hilbert dims {' '.join(map(str, out['hilbert_dims']))}")


def cmd_survey(args) -> int:
    bound = LARGE_N if args.large else MAX_N
    if not 1 <= args.n <= bound:
        print(f"error: n={args.n} exceeds the census bound 1..{bound}", file=sys.stderr)
        return EXIT_INPUT
    try:
        report = survey(args.n, max_n=bound, cap=args.max_orbit)
    except ConsistencyViolation as exc:
        print(f"error: ConsistencyViolation {exc}", file=sys.stderr)
        print(json.dumps(set_document(exc.qset, "counterexample"), indent=2), file=sys.stderr)
        return EXIT_CONSISTENCY
    data = report.as_dict()
    text = json.dumps(data, indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        print(f"census n={report.n}")
        for name, counts in report.profiles.items():
            if counts.get("skipped"):
                print(f"  {name:<26} skipped at this order")
                continue
            print(f"  {name:<26} {counts['classes']:>6} classes {counts['labelled']:>8} labelled")
        print(f"  quantum binomial lri: {report.braided} braided, {report.non_braided} not braided")
        print(f"  checks passed: {', '.join(report.checks)}")
    return EXIT_OK


def cmd_nf(args) -> int:
    s, doc_ordering, _ = load_document(args.path)
    word = parse_indices(args.word)
    for c in word:
        if not 0 <= c < s.n:
            raise DocumentError(f"letter {c} out of range for n={s.n}")
    ordering = parse_indices(args.ordering, "ordering") if args.ordering else doc_ordering
    if ordering is not None and sorted(ordering) != list(range(s.n)):
        raise DocumentError(f"ordering {list(ordering)} is not a permutation of X")
    nf = normal_form(s, word, ordering, cap=args.max_orbit)
    size = orbit(s, word, args.max_orbit).size
    if args.json:
        print(json.dumps({"normal_form": list(nf), "orbit_size": size}))
    else:
        print(_word(nf))
        print(f"orbit size {size}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quadset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--max-orbit", type=int, default=DEFAULT_CAP, metavar="N",
                       help=f"orbit size cap (default {DEFAULT_CAP})")

    p = sub.add_parser("check", help="report the properties of a set document")
    p.add_argument("path")
    p.add_argument("--theorem", action="store_true", help="evaluate the four-way equivalence")
    p.add_argument("--skew", action="store_true", help="check skew-polynomial type")
    p.add_argument("--ordering", help="comma-separated generator order for --skew")
    p.add_argument("--degree", type=int, help="also print Hilbert dimensions up to this degree")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="exhaustive census at order n")
    p.add_argument("n", type=int)
    p.add_argument("--out", help="write the census JSON to this file")
    p.add_argument("--large", action="store_true", help=f"allow n up to {LARGE_N}")
    common(p)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("nf", help="normal form and orbit size of a word")
    p.add_argument("path")
    p.add_argument("word", help="comma-separated 0-based letters")
    p.add_argument("--ordering", help="comma-separated generator order")
    common(p)
    p.set_defaults(func=cmd_nf)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrbitCapExceeded as exc:
        print(f"error: OrbitCapExceeded: cap {exc.cap} reached", file=sys.stderr)
        return EXIT_CAP
    except QuadSetError as exc:
        print(f"error: {type(exc).__name__} {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
