"""Command line driver: ``pbwpoly verify|report|weyl|pbw ...``.

Exit codes: 0 when everything passes, 1 when an identity is violated,
2 for usage and guard errors.
"""
from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import crystal, gt, pbw, polytope, weyl
from .jsonio import dumps, render_text
from .poset import LSequence, build_poset
from .suites import SUITES, Ranges, UsageError, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_case(text: str) -> dict:
    """``"i=4,n=6,ell=4,5,6,6"``: bare values extend the previous key."""
    out: dict[str, list[int]] = {}
    key = None
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        if "=" in tok:
            key, _, tok = tok.partition("=")
            if key not in ("n", "i", "ell", "m"):
                raise argparse.ArgumentTypeError(f"unknown case key {key!r}")
            out[key] = []
        if key is None:
            raise argparse.ArgumentTypeError(f"case must start with key=value, got {text!r}")
        try:
            out[key].append(int(tok))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad value {tok!r} in case {text!r}") from None
    for k in ("n", "i", "m"):
        if k in out and len(out[k]) != 1:
            raise argparse.ArgumentTypeError(f"{k} takes one value")
    return {k: tuple(v) if k == "ell" else v[0] for k, v in out.items()}


def add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--out", type=Path, help="write the document here instead of stdout")


def add_sequence(p: argparse.ArgumentParser, m_default: int | None = 1) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--ell", type=int_list, help="comma-separated sequence, e.g. 2,3")
    p.add_argument("--m", type=int, default=m_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pbwpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--n", type=int)
    v.add_argument("--i", type=int)
    v.add_argument("--ell", type=int_list)
    v.add_argument("--m", type=int)
    v.add_argument("--n-max", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--case", type=parse_case, help='single case, e.g. "i=4,n=6,ell=4,5,6,6"')
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="omit wall time for byte-identical reports")
    add_output(v)

    r = sub.add_parser("report", help="emit one object as JSON or text")
    r.add_argument("kind", choices=["polytope", "character", "kogan-face", "basis", "weyl"])
    add_sequence(r)
    add_output(r)

    w = sub.add_parser("weyl", help="conversions between ell, permutations and words")
    wsub = w.add_subparsers(dest="action", required=True)
    to = wsub.add_parser("to-ell", help="permutation window or word -> ell")
    to.add_argument("--n", type=int, required=True)
    to.add_argument("--i", type=int, required=True)
    grp = to.add_mutually_exclusive_group(required=True)
    grp.add_argument("--w", type=int_list, help="window, e.g. 2,4,1,3")
    grp.add_argument("--word", help='word, e.g. "s1s3s2"')
    add_output(to)
    fr = wsub.add_parser("from-ell", help="ell -> permutation and reduced word")
    add_sequence(fr, m_default=None)
    add_output(fr)
    wd = wsub.add_parser("word", help="evaluate a word")
    wd.add_argument("--n", type=int, required=True)
    wd.add_argument("--word", required=True)
    add_output(wd)

    pb = sub.add_parser("pbw", help="PBW-graded oracle")
    pbsub = pb.add_subparsers(dest="action", required=True)
    pv = pbsub.add_parser("verify", help="certificate for one Demazure module")
    add_sequence(pv)
    pv.add_argument("--w", type=int_list, help="permutation window instead of --ell")
    add_output(pv)
    return parser


def emit(doc, args: argparse.Namespace) -> None:
    text = dumps(doc) if args.format == "json" else render_text(doc)
    if args.out:
        args.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def sequence_from(args: argparse.Namespace) -> LSequence:
    if getattr(args, "w", None):
        return weyl.ell_of(weyl.Permutation(args.w), args.i)
    if args.ell is None:
        raise UsageError("--ell is required")
    return LSequence(args.i, args.n, args.ell)


# -- commands ------------------------------------------------------------------------

def cmd_verify(args: argparse.Namespace) -> int:
    n, i, ell, m = args.n, args.i, args.ell, args.m
    if args.case:
        n = args.case.get("n", n)
        i = args.case.get("i", i)
        ell = args.case.get("ell", ell)
        m = args.case.get("m", m)
    ranges = Ranges(n=n, i=i, ell=ell, m=m, n_max=args.n_max, m_max=args.m_max)
    report = run_suite(args.suite, ranges, jobs=max(1, args.jobs), timing=not args.no_timing)
    emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAIL


def report_polytope(seq: LSequence, m: int) -> dict:
    p = build_poset(seq)
    doc: dict = {"poset": p.to_json(), "m": m}
    for kind in polytope.KINDS:
        h = polytope.polytope_of(p, kind, m)
        doc[kind] = {**h.to_json(), "lattice_points": polytope.lattice_points(h)}
    if seq.size:
        order_f, chain_f = polytope.facet_counts_closed_form(seq)
        doc["facets"] = {"order": order_f, "chain": chain_f}
    doc["ehrhart"] = polytope.ehrhart(p, polytope.CHAIN)
    doc["unimodular_criterion"] = polytope.unimodular_equivalence_criterion(seq)
    doc["gorenstein_criterion"] = polytope.gorenstein_criterion(seq)
    return doc


def report_character(seq: LSequence, m: int) -> dict:
    char = crystal.demazure_character(seq, m)
    kogan = gt.char_of_patterns(gt.face_lattice_points(gt.maximal_face_for_ell(seq, m)))
    poly = crystal.polytope_character(seq, m)
    return {
        "ell": list(seq.ell), "n": seq.n, "i": seq.i, "m": m,
        "terms": [{"weight": gt.format_weight(w), "mult": k} for w, k in char.terms()],
        "size": sum(char.values()),
        "sources_agree": char == kogan == poly,
    }


def report_kogan(seq: LSequence, m: int) -> dict:
    f = gt.maximal_face_for_ell(seq, m)
    word, tau = gt.kogan_type(f)
    iso = gt.order_polytope_iso(f)
    return {
        "tau": list(tau.window),
        "tau_word": weyl.word_str(word),
        "equalities": f.to_json(),
        "diagonal_counts": list(gt.implicit_closure(f).diagonal_counts),
        "lattice_points": len(gt.face_lattice_points(f)),
        "order_polytope_map": [{"vertex": list(v), "entry": list(e)} for v, e in sorted(iso.items())],
    }


def report_basis(seq: LSequence, m: int) -> dict:
    p = build_poset(seq)
    pts = polytope.lattice_points(polytope.chain_polytope(p, m))
    doc = {
        "roots": [list(v) for v in p.vertices],
        "exponents": pts,
        "monomials": [" ".join(f"f{a},{b}^{c}" if c > 1 else f"f{a},{b}" for (a, b), c in zip(p.vertices, s) if c) or "1" for s in pts],
    }
    if seq.n <= pbw.MAX_N and m <= pbw.MAX_M:
        doc["graded_dims"] = pbw.demazure_graded(seq, m).graded_dims
    return doc


def report_weyl(seq: LSequence) -> dict:
    word, w = weyl.word_of_ell(seq)
    tau = weyl.tau_of(w, seq.i)
    return {
        "ell": list(seq.ell), "n": seq.n, "i": seq.i,
        "w": list(w.window),
        "word": weyl.word_str(word),
        "length": len(word),
        "identity": w.is_identity(),
        "tau": list(tau.window),
        "tau_word": weyl.word_str(weyl.reduced_word(tau)),
        "inversion_roots": [list(r) for r in sorted(weyl.inversion_roots(w))],
    }


def cmd_report(args: argparse.Namespace) -> int:
    seq = sequence_from(args)
    m = args.m or 1
    if args.kind == "polytope":
        doc = report_polytope(seq, m)
    elif args.kind == "character":
        doc = report_character(seq, m)
    elif args.kind == "kogan-face":
        doc = report_kogan(seq, m)
    elif args.kind == "basis":
        doc = report_basis(seq, m)
    else:
        doc = report_weyl(seq)
    emit(doc, args)
    return EXIT_OK


def cmd_weyl(args: argparse.Namespace) -> int:
    if args.action == "to-ell":
        w = weyl.Permutation(args.w) if args.w else weyl.from_word(weyl.parse_word(args.word), args.n)
        if w.n != args.n:
            raise UsageError(f"permutation has size {w.n + 1}, expected {args.n + 1}")
        seq = weyl.ell_of(w, args.i)
        emit({"w": list(w.window), "ell": list(seq.ell), "i": seq.i, "n": seq.n}, args)
    elif args.action == "from-ell":
        emit(report_weyl(sequence_from(args)), args)
    else:
        word = weyl.parse_word(args.word)
        w = weyl.from_word(word, args.n)
        emit({"word": weyl.word_str(word), "w": list(w.window), "length": w.length(), "reduced": weyl.is_reduced(word, args.n)}, args)
    return EXIT_OK


def cmd_pbw(args: argparse.Namespace) -> int:
    if args.ell is None and not args.w:
        args.ell = (args.n,) * args.i  # longest element by default
    seq = sequence_from(args)
    cert = pbw.monomial_independence(seq, args.m)
    doc = {"n": seq.n, "i": seq.i, "ell": list(seq.ell), "m": args.m, **cert.to_json()}
    emit(doc, args)
    return EXIT_OK if cert.independent else EXIT_FAIL


COMMANDS = {"verify": cmd_verify, "report": cmd_report, "weyl": cmd_weyl, "pbw": cmd_pbw}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        # TooLargeError and invalid sequences are ValueErrors as well
        print(f"pbwpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
