"""Command-line front end.

Exit codes: 0 success (or all verification cases passing), 1 verification
failure, 2 parse/usage error, 3 a search refused or ran out of budget
(width cap, length cap, node or work budget).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (CapHitError, EmptyWordError, InfeasibleError,
                     InvalidParameterError, ParseError, RegistryError)
from .extremal import ExQuery, check_klazar_inequality, ex_bruteforce
from .formations import (build_alt_avoider, build_es_avoider,
                         build_two_letter_avoider, fl_bounded, fw, fw_witness)
from .metrics import BinaryFormationSpec, binary_closed_forms, l_metric, r_metric
from .parsing import parse_word, render_formation, render_word
from .registry import FAIL, INCONCLUSIVE, load_manifest, run_verify
from .words import alphabet_size, alt, contains, is_r_sparse, up


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_fw(args) -> int:
    word = parse_word(args.word)
    width = fw(word, s_max=args.s_max, workers=args.threads)
    name = render_word(word)
    if width is None:
        _emit(args, f"fw({name}) not determined within s-max {args.s_max}",
              {"word": list(word), "s_max": args.s_max, "status": "exhausted"})
        return 3
    _emit(args, f"fw({name}) = {width}",
          {"word": list(word), "s_max": args.s_max, "fw": width})
    return 0


def _cmd_fw_witness(args) -> int:
    word = parse_word(args.word)
    witness = fw_witness(word, args.rows, workers=args.threads)
    name = render_word(word)
    if witness is None:
        _emit(args, f"absent: every binary ({alphabet_size(word)},{args.rows})-"
                    f"formation contains {name}",
              {"word": list(word), "s": args.rows, "witness": None})
        return 0
    _emit(args, render_formation(witness),
          {"word": list(word), "s": args.rows, "witness": witness.to_lists()})
    return 0


def _cmd_fl(args) -> int:
    word = parse_word(args.word)
    length = fl_bounded(word, r_max=args.r_max, budget=args.budget,
                        s_max=args.s_max)
    name = render_word(word)
    if length is None:
        _emit(args, f"fl({name}) not determined within r-max {args.r_max}",
              {"word": list(word), "r_max": args.r_max, "status": "exhausted"})
        return 3
    _emit(args, f"fl({name}) = {length}",
          {"word": list(word), "r_max": args.r_max, "fl": length})
    return 0


def _cmd_metric(args) -> int:
    word = parse_word(args.word)
    value = l_metric(word) if args.metric == "l" else r_metric(word)
    _emit(args, f"{args.metric}({render_word(word)}) = {value}",
          {"word": list(word), "metric": args.metric, "value": value})
    return 0


def _cmd_bounds(args) -> int:
    spec = BinaryFormationSpec.from_text(args.spec)
    bounds = binary_closed_forms(spec)
    _emit(args,
          f"l={bounds.l_value} r={bounds.r_value} "
          f"fw-lower={bounds.fw_lower} fw-upper={bounds.fw_upper}",
          {"spec": spec.to_json(), "l": bounds.l_value, "r": bounds.r_value,
           "fw_lower": bounds.fw_lower, "fw_upper": bounds.fw_upper})
    return 0


def _cmd_contains(args) -> int:
    text = parse_word(args.text)
    pattern = parse_word(args.pattern)
    answer = contains(text, pattern)
    _emit(args, "true" if answer else "false",
          {"text": list(text), "pattern": list(pattern), "contains": answer})
    return 0


def _cmd_sparse(args) -> int:
    word = parse_word(args.word)
    answer = is_r_sparse(word, args.window)
    _emit(args, "true" if answer else "false",
          {"word": list(word), "window": args.window, "sparse": answer})
    return 0


def _cmd_construct(args) -> int:
    if args.kind == "up":
        word = up(args.c, args.t)
        _emit(args, render_word(word), {"word": list(word)})
    elif args.kind == "alt":
        word = alt(args.c, args.t)
        _emit(args, render_word(word), {"word": list(word)})
    elif args.kind == "es-avoider":
        f = build_es_avoider(args.r, args.s, size_budget=args.size_budget)
        _emit(args, render_formation(f), {"formation": f.to_lists()})
    elif args.kind == "alt-avoider":
        f = build_alt_avoider(args.c, args.k)
        _emit(args, render_formation(f), {"formation": f.to_lists()})
    else:  # two-letter-avoider
        f = build_two_letter_avoider(parse_word(args.word))
        _emit(args, render_formation(f), {"formation": f.to_lists()})
    return 0


def _cmd_ex(args) -> int:
    pattern = parse_word(args.pattern)
    query = ExQuery(pattern, args.n, args.sparsity,
                    length_cap=args.length_cap, node_budget=args.budget)
    result = ex_bruteforce(query, workers=args.threads)
    witness = render_word(result.witness) or "(empty)"
    _emit(args,
          f"Ex({render_word(pattern)}, n={args.n}, sparsity={args.sparsity}) "
          f"= {result.max_length}  witness {witness}  "
          f"nodes {result.nodes_explored}",
          {"pattern": list(pattern), "n": args.n, "sparsity": args.sparsity,
           "max_length": result.max_length, "witness": list(result.witness),
           "nodes_explored": result.nodes_explored})
    return 0


def _cmd_klazar(args) -> int:
    report = check_klazar_inequality(parse_word(args.pattern), args.c, args.d,
                                     args.n, length_cap=args.length_cap,
                                     node_budget=args.budget)
    verdict = "holds" if report.passed else "VIOLATED"
    _emit(args,
          f"ex_d={report.ex_d} <= ex_c={report.ex_c} <= "
          f"(1+{report.ex_c_small})*{report.ex_d}: {verdict}",
          {"pattern": list(report.pattern), "c": args.c, "d": args.d,
           "n": args.n, "ex_d": report.ex_d, "ex_c": report.ex_c,
           "ex_c_small": report.ex_c_small, "passed": report.passed})
    return 0 if report.passed else 1


def _cmd_verify(args) -> int:
    cases = load_manifest(args.manifest)
    outcomes = run_verify(cases, id_filter=args.filter, workers=args.threads)
    if args.json:
        print(json.dumps([
            {"id": o.case.case_id, "status": o.status, "measured": o.measured,
             "expected": o.case.expected, "detail": o.detail,
             "citation": o.case.citation}
            for o in outcomes]))
    else:
        for o in outcomes:
            line = (f"[{o.status.upper():<12}] {o.case.case_id}: "
                    f"measured {o.measured}, expected {o.case.expected}  "
                    f"({o.case.citation})")
            if o.detail:
                line += f"  -- {o.detail}"
            print(line)
        counts = {s: sum(1 for o in outcomes if o.status == s)
                  for s in ("pass", "fail", "inconclusive", "reported")}
        print(f"{len(outcomes)} cases: {counts['pass']} passed, "
              f"{counts['fail']} failed, {counts['inconclusive']} inconclusive, "
              f"{counts['reported']} reported")
    if any(o.status == FAIL for o in outcomes):
        return 1
    if any(o.status == INCONCLUSIVE for o in outcomes):
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formwidth",
        description="Formation width, greedy row metrics, and exhaustive "
                    "extremal-function search for forbidden subsequence "
                    "patterns.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON object instead of text")

    p = sub.add_parser("fw", help="formation width of a word")
    p.add_argument("word")
    p.add_argument("--s-max", type=int, default=16, dest="s_max")
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(handler=_cmd_fw)

    p = sub.add_parser("fw-witness",
                       help="least binary formation of a given row count "
                            "avoiding a word, if any")
    p.add_argument("word")
    p.add_argument("rows", type=int)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(handler=_cmd_fw_witness)

    p = sub.add_parser("fl", help="formation length of a word, bounded search")
    p.add_argument("word")
    p.add_argument("--r-max", type=int, default=8, dest="r_max")
    p.add_argument("--budget", type=int, default=10 ** 8)
    p.add_argument("--s-max", type=int, default=16, dest="s_max")
    common(p)
    p.set_defaults(handler=_cmd_fl)

    for metric in ("l", "r"):
        p = sub.add_parser(metric, help=f"greedy {metric}-metric of a word")
        p.add_argument("word")
        common(p)
        p.set_defaults(handler=_cmd_metric, metric=metric)

    p = sub.add_parser("bounds",
                       help="closed-form metrics and width bracket of a "
                            "stacked-run word, e.g. c=3;e=1,1,1")
    p.add_argument("spec")
    common(p)
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("contains", help="containment up to letter renaming")
    p.add_argument("text")
    p.add_argument("pattern")
    common(p)
    p.set_defaults(handler=_cmd_contains)

    p = sub.add_parser("sparse", help="window sparsity check")
    p.add_argument("word")
    p.add_argument("window", type=int)
    common(p)
    p.set_defaults(handler=_cmd_sparse)

    p = sub.add_parser("construct", help="named words and avoider formations")
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("up", help="t ascending rows on c letters")
    k.add_argument("c", type=int)
    k.add_argument("t", type=int)
    common(k)
    k.set_defaults(handler=_cmd_construct)
    k = kinds.add_parser("alt", help="t alternating rows on c letters")
    k.add_argument("c", type=int)
    k.add_argument("t", type=int)
    common(k)
    k.set_defaults(handler=_cmd_construct)
    k = kinds.add_parser("es-avoider",
                         help="extremal formation avoiding every binary "
                              "(r,s)-formation")
    k.add_argument("r", type=int)
    k.add_argument("s", type=int)
    k.add_argument("--size-budget", type=int, default=1 << 16,
                   dest="size_budget")
    common(k)
    k.set_defaults(handler=_cmd_construct)
    k = kinds.add_parser("alt-avoider",
                         help="k-th member of the staircase family whose "
                              "member k-1 avoids alt(c,k)")
    k.add_argument("c", type=int)
    k.add_argument("k", type=int)
    common(k)
    k.set_defaults(handler=_cmd_construct)
    k = kinds.add_parser("two-letter-avoider",
                         help="tight witness formation for a two-letter word")
    k.add_argument("word")
    common(k)
    k.set_defaults(handler=_cmd_construct)

    p = sub.add_parser("ex", help="exact extremal function by exhaustive search")
    p.add_argument("pattern")
    p.add_argument("n", type=int, help="distinct letters allowed")
    p.add_argument("--sparsity", type=int, default=None,
                   help="window size (default: the pattern's alphabet)")
    p.add_argument("--length-cap", type=int, default=64, dest="length_cap")
    p.add_argument("--budget", type=int, default=10 ** 7)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(handler=_cmd_ex)

    p = sub.add_parser("klazar",
                       help="check the sparsity-collapse inequality by "
                            "brute force")
    p.add_argument("pattern")
    p.add_argument("c", type=int)
    p.add_argument("d", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--length-cap", type=int, default=64, dest="length_cap")
    p.add_argument("--budget", type=int, default=10 ** 7)
    common(p)
    p.set_defaults(handler=_cmd_klazar)

    p = sub.add_parser("verify", help="run the shipped verification registry")
    p.add_argument("--filter", default=None, help="glob over case ids")
    p.add_argument("--manifest", default=None,
                   help="alternative manifest file (default: packaged)")
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "command", None) == "ex" and args.sparsity is None:
            args.sparsity = alphabet_size(parse_word(args.pattern))
        return args.handler(args)
    except (ParseError, EmptyWordError, InvalidParameterError,
            RegistryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapHitError as exc:
        print(f"not certified: {exc}", file=sys.stderr)
        return 3
    except InfeasibleError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        if exc.best_length is not None and exc.best_length >= 0:
            print(f"partial best: length {exc.best_length}, "
                  f"witness {render_word(exc.witness)}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
