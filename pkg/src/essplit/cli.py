"""Command-line front end.

Subcommands: split, closure, rank, circuits, flats, check, demo-fig2.
Set-valued flags take comma-separated labels (e.g. ``--subset 2,6,gamma``);
the names ``a`` and ``gamma`` refer to the two new split elements unless
overridden with --label-a / --label-gamma.

Exit codes: 0 ok, 1 usage or parse failure, 2 precondition violation,
3 a formula/oracle disagreement was found.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    BaseNotFlat,
    ElementNotInX,
    EsSplitError,
    FormulaDisagreement,
    GroundSetTooLarge,
    InvalidPartition,
    LabelCollision,
    ParseError,
    PreconditionViolated,
    UnknownLabel,
)
from .gf2 import format_matrix, parse_matrix
from .graphs import incidence_matrix, parse_graph
from .matroid import BinaryMatroid
from .showcase import (
    BASE_FLATS_LISTED,
    CLOSURE_GOLDENS,
    SPLIT_FLATS_LISTED,
    showcase_context,
)
from .splitting import (
    SplitContext,
    SplitQuery,
    build_split_matrix,
    predict_circuits,
    predict_closure,
    predict_is_flat,
    predict_rank,
    split_matroid,
)

OK, USAGE, PRECONDITION, DISAGREEMENT = 0, 1, 2, 3

_PRECONDITION_ERRORS = (
    UnknownLabel,
    LabelCollision,
    ElementNotInX,
    GroundSetTooLarge,
    PreconditionViolated,
    BaseNotFlat,
    InvalidPartition,
)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _UsageError(message)


def _parse_labels(text: str | None) -> tuple[str, ...]:
    if not text:
        return ()
    return tuple(tok for tok in (piece.strip() for piece in text.split(",")) if tok)


def _fmt_set(order: Sequence[str], labels: Iterable[str]) -> str:
    position = {lab: i for i, lab in enumerate(order)}
    return "{" + ",".join(sorted(labels, key=position.__getitem__)) + "}"


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _load_context(args: argparse.Namespace) -> SplitContext:
    text = Path(args.input).read_text()
    if args.kind == "graph":
        matrix = incidence_matrix(parse_graph(text, args.input))
    else:
        matrix = parse_matrix(text, args.input)
    base = BinaryMatroid(matrix, enumeration_cap=args.cap)
    return SplitContext(
        base=base,
        x_set=frozenset(_parse_labels(args.X)),
        e=args.e,
        label_a=args.label_a,
        label_gamma=args.label_gamma,
    )


def _require_subset(args: argparse.Namespace) -> tuple[str, ...]:
    if args.subset is None:
        raise _UsageError("--subset is required for this command")
    return _parse_labels(args.subset)


# -- commands ----------------------------------------------------------------


def cmd_split(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    matrix = build_split_matrix(ctx)
    if args.format == "json":
        _emit_json(
            {
                "col_labels": list(matrix.col_labels),
                "rows": [row.to_list() for row in matrix.rows],
            }
        )
    else:
        sys.stdout.write(format_matrix(matrix))
    return OK


def cmd_closure(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    q = SplitQuery.of(ctx, _require_subset(args))
    order = ctx.split_ground

    if args.mode == "oracle":
        oracle = split_matroid(ctx).closure_of(q.a_prime)
        payload = {
            "matched": [],
            "formula": None,
            "oracle": list(ctx.sort_set(oracle)),
            "agree": None,
        }
    else:
        report = predict_closure(ctx, q, with_oracle=args.mode == "both")
        payload = report.as_dict(ctx)

    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"A' = {_fmt_set(order, q.a_prime)}")
        print(f"matched: {', '.join(payload['matched']) or '(none)'}")
        if payload["formula"] is not None:
            print(f"formula: {_fmt_set(order, payload['formula'])}")
        if payload["oracle"] is not None:
            print(f"oracle:  {_fmt_set(order, payload['oracle'])}")
        if payload["agree"] is not None:
            print(f"agree:   {payload['agree']}")
    return DISAGREEMENT if payload["agree"] is False else OK


def cmd_rank(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    q = SplitQuery.of(ctx, _require_subset(args))
    formula = predict_rank(ctx, q) if args.mode in ("formula", "both") else None
    oracle = (
        split_matroid(ctx).rank_of(q.a_prime)
        if args.mode in ("oracle", "both")
        else None
    )
    agree = None if formula is None or oracle is None else formula == oracle
    if args.format == "json":
        _emit_json({"formula": formula, "oracle": oracle, "agree": agree})
    else:
        print(f"A' = {_fmt_set(ctx.split_ground, q.a_prime)}")
        if formula is not None:
            print(f"formula: {formula}")
        if oracle is not None:
            print(f"oracle:  {oracle}")
        if agree is not None:
            print(f"agree:   {agree}")
    return DISAGREEMENT if agree is False else OK


def cmd_circuits(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    order = ctx.split_ground
    payload: dict = {}
    if args.mode in ("formula", "both"):
        family = predict_circuits(ctx)
        payload["family"] = {
            "c0": [list(ctx.sort_set(c)) for c in family.c0],
            "c1": [list(ctx.sort_set(c)) for c in family.c1],
            "c2": [list(ctx.sort_set(c)) for c in family.c2],
            "c3": [list(ctx.sort_set(c)) for c in family.c3],
            "delta": list(ctx.sort_set(family.delta)),
        }
        predicted = set(family.all_circuits())
    if args.mode in ("oracle", "both"):
        oracle = split_matroid(ctx).circuits()
        payload["oracle"] = [list(ctx.sort_set(c)) for c in oracle]
    payload["equal"] = (
        predicted == set(oracle) if args.mode == "both" else None
    )
    if args.format == "json":
        _emit_json(payload)
    else:
        if "family" in payload:
            for name in ("c0", "c1", "c2", "c3"):
                for c in payload["family"][name]:
                    print(f"{name}: {_fmt_set(order, c)}")
            print(f"delta: {_fmt_set(order, payload['family']['delta'])}")
        if "oracle" in payload:
            for c in payload["oracle"]:
                print(f"oracle: {_fmt_set(order, c)}")
        if payload["equal"] is not None:
            print(f"equal: {payload['equal']}")
    return DISAGREEMENT if payload["equal"] is False else OK


def cmd_flats(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    oracle = split_matroid(ctx)
    order = ctx.split_ground
    violations = 0

    def condition_of(q: SplitQuery) -> int | None:
        try:
            return predict_is_flat(ctx, q)
        except BaseNotFlat:
            return None

    if args.subset is not None:
        q = SplitQuery.of(ctx, _parse_labels(args.subset))
        is_flat = oracle.is_flat(q.a_prime)
        condition = condition_of(q) if args.mode in ("formula", "both") else None
        if condition is not None and not is_flat:
            violations += 1
        if args.format == "json":
            _emit_json(
                {
                    "subset": list(ctx.sort_set(q.a_prime)),
                    "is_flat": is_flat,
                    "condition": condition,
                }
            )
        else:
            print(
                f"{_fmt_set(order, q.a_prime)} flat={is_flat} "
                f"condition={condition}"
            )
    else:
        rows = []
        for flat in oracle.flats():
            q = SplitQuery.of(ctx, flat)
            condition = condition_of(q) if args.mode in ("formula", "both") else None
            rows.append(
                {"flat": list(ctx.sort_set(flat)), "condition": condition}
            )
        if args.format == "json":
            _emit_json({"flats": rows})
        else:
            for row in rows:
                print(f"{_fmt_set(order, row['flat'])} condition={row['condition']}")
    return DISAGREEMENT if violations else OK


def _iter_check_subsets(
    ctx: SplitContext, sample: int | None, seed: int
) -> Iterable[frozenset[str]]:
    ground = ctx.split_ground
    n = len(ground)
    if sample is None:
        if n > BinaryMatroid.SUBSET_CAP:
            raise GroundSetTooLarge(
                f"{n} split elements exceed the exhaustive cap of "
                f"{BinaryMatroid.SUBSET_CAP}; rerun with --sample N"
            )
        oracle = split_matroid(ctx)
        yield from oracle.all_subsets()
        return
    rng = random.Random(seed)
    seen: set[int] = set()
    for _ in range(sample):
        mask = rng.randrange(1 << n)
        if mask in seen:
            continue
        seen.add(mask)
        yield frozenset(ground[i] for i in range(n) if (mask >> i) & 1)


def cmd_check(args: argparse.Namespace) -> int:
    ctx = _load_context(args)
    oracle = split_matroid(ctx)
    order = ctx.split_ground

    case_hits: dict[str, int] = {}
    no_case = 0
    closure_witnesses: list[dict] = []
    rank_witnesses: list[dict] = []
    subsets = 0

    for a_prime in _iter_check_subsets(ctx, args.sample, args.seed):
        subsets += 1
        q = SplitQuery.of(ctx, a_prime)
        report = predict_closure(ctx, q, with_oracle=False)
        oracle_closure = oracle.closure_of(a_prime)
        if report.no_case_applies:
            no_case += 1
        for case_id in report.matched_cases:
            case_hits[case_id] = case_hits.get(case_id, 0) + 1
        if report.formula_result is not None and report.formula_result != oracle_closure:
            closure_witnesses.append(
                {
                    "subset": list(ctx.sort_set(a_prime)),
                    "matched": list(report.matched_cases),
                    "formula": list(ctx.sort_set(report.formula_result)),
                    "oracle": list(ctx.sort_set(oracle_closure)),
                }
            )
        formula_rank = predict_rank(ctx, q)
        oracle_rank = oracle.rank_of(a_prime)
        if formula_rank != oracle_rank:
            rank_witnesses.append(
                {
                    "subset": list(ctx.sort_set(a_prime)),
                    "formula": formula_rank,
                    "oracle": oracle_rank,
                }
            )

    family_equal = set(predict_circuits(ctx).all_circuits()) == set(oracle.circuits())
    corollary_ok = oracle.rank_of(oracle.ground) == ctx.base.rank_of(ctx.base.ground) + 1

    flat_violations: list[dict] = []
    for flat in ctx.base.flats():
        for extras in ((), (ctx.label_a,), (ctx.label_gamma,), (ctx.label_a, ctx.label_gamma)):
            a_prime = frozenset(flat) | set(extras)
            q = SplitQuery.of(ctx, a_prime)
            condition = predict_is_flat(ctx, q)
            if condition is not None and not oracle.is_flat(a_prime):
                flat_violations.append(
                    {"subset": list(ctx.sort_set(a_prime)), "condition": condition}
                )

    disagreements = (
        len(closure_witnesses)
        + len(rank_witnesses)
        + len(flat_violations)
        + (0 if family_equal else 1)
        + (0 if corollary_ok else 1)
    )
    summary = {
        "subsets": subsets,
        "case_hits": {cid: case_hits.get(cid, 0) for cid in sorted(case_hits)},
        "no_case": no_case,
        "closure_disagreements": closure_witnesses,
        "rank_disagreements": rank_witnesses,
        "circuit_family_equal": family_equal,
        "full_rank_increment_ok": corollary_ok,
        "flat_condition_violations": flat_violations,
        "disagreements": disagreements,
    }
    if args.format == "json":
        _emit_json(summary)
    else:
        print(f"subsets checked: {subsets}")
        for cid, hits in summary["case_hits"].items():
            print(f"  case {cid}: {hits}")
        print(f"no case applies: {no_case}")
        print(f"rank disagreements: {len(rank_witnesses)}")
        for witness in rank_witnesses:
            print(
                f"  rank mismatch at {_fmt_set(order, witness['subset'])}: "
                f"formula {witness['formula']} vs oracle {witness['oracle']}"
            )
        print(f"closure disagreements: {len(closure_witnesses)}")
        for witness in closure_witnesses:
            print(
                f"  closure mismatch at {_fmt_set(order, witness['subset'])} "
                f"(matched {', '.join(witness['matched'])}): formula "
                f"{_fmt_set(order, witness['formula'])} vs oracle "
                f"{_fmt_set(order, witness['oracle'])}"
            )
        print(f"circuit family equal: {family_equal}")
        print(f"full-rank increment ok: {corollary_ok}")
        print(f"flat condition violations: {len(flat_violations)}")
        for witness in flat_violations:
            print(
                f"  condition {witness['condition']} accepted non-flat "
                f"{_fmt_set(order, witness['subset'])}"
            )
    return DISAGREEMENT if disagreements else OK


def cmd_demo_fig2(args: argparse.Namespace) -> int:
    ctx = showcase_context()
    oracle = split_matroid(ctx)
    order = ctx.split_ground

    print("showcase: wheel graph, X={x,y}, e=y")
    print(f"base rank: {ctx.base.rank_of(ctx.base.ground)}")
    print(f"split rank: {oracle.rank_of(oracle.ground)}")
    print()
    print("closure queries:")
    for query, listed in CLOSURE_GOLDENS:
        q = SplitQuery.of(ctx, query)
        report = predict_closure(ctx, q, with_oracle=True)
        computed = report.oracle_result
        assert computed is not None
        line = f"cl'({_fmt_set(order, query)}) = {_fmt_set(order, computed)}"
        notes = []
        if frozenset(listed) != computed:
            notes.append(f"listed value {_fmt_set(order, listed)} rejected by oracle")
        if report.agreement is False:
            assert report.formula_result is not None
            notes.append(
                f"formula ({', '.join(report.matched_cases)}) gives "
                f"{_fmt_set(order, report.formula_result)}"
            )
        if notes:
            line += "  [" + "; ".join(notes) + "]"
        print(line)

    def flat_report(
        name: str, matroid: BinaryMatroid, listed: tuple[tuple[str, ...], ...]
    ) -> None:
        print()
        print(f"{name}: {len(listed)} listed flats")
        rejected = [entry for entry in listed if not matroid.is_flat(entry)]
        print(f"confirmed: {len(listed) - len(rejected)}")
        for entry in rejected:
            closure = matroid.closure_of(entry)
            print(
                f"rejected: {_fmt_set(order, entry)} "
                f"(closure is {_fmt_set(order, closure)})"
            )
        listed_sets = {frozenset(entry) for entry in listed}
        flats = [flat for flat in matroid.flats() if flat]
        extras = [flat for flat in flats if flat not in listed_sets]
        print(
            f"full oracle flat list ({len(flats)}, empty flat omitted; "
            f"{len(extras)} absent from the listed data):"
        )
        for flat in flats:
            marker = "" if flat in listed_sets else "  [unlisted]"
            print(f"  {_fmt_set(order, flat)}{marker}")

    flat_report("base matroid", ctx.base, BASE_FLATS_LISTED)
    flat_report("split matroid", oracle, SPLIT_FLATS_LISTED)
    return OK


# -- wiring -------------------------------------------------------------------


def _add_instance_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="matrix or graph file")
    sub.add_argument("--kind", choices=("matrix", "graph"), default="matrix")
    sub.add_argument("--X", required=True, help="comma-separated labels of X")
    sub.add_argument("--e", required=True, help="marked element of X")
    sub.add_argument("--label-a", default="a", dest="label_a")
    sub.add_argument("--label-gamma", default="gamma", dest="label_gamma")
    sub.add_argument("--cap", type=int, default=BinaryMatroid.DEFAULT_CAP)
    sub.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> _Parser:
    parser = _Parser(prog="essplit", description=__doc__)
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, func, needs_subset in (
        ("split", cmd_split, False),
        ("closure", cmd_closure, True),
        ("rank", cmd_rank, True),
        ("circuits", cmd_circuits, False),
        ("flats", cmd_flats, False),
    ):
        sub = subparsers.add_parser(name)
        _add_instance_flags(sub)
        if name != "split":
            sub.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
        if needs_subset or name == "flats":
            sub.add_argument("--subset", default=None, help="comma-separated labels of A'")
        sub.set_defaults(func=func)

    check = subparsers.add_parser("check")
    _add_instance_flags(check)
    check.add_argument("--sample", type=int, default=None, metavar="N")
    check.add_argument("--seed", type=int, default=0, metavar="S")
    check.set_defaults(func=cmd_check)

    demo = subparsers.add_parser("demo-fig2")
    demo.set_defaults(func=cmd_demo_fig2)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except _PRECONDITION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION
    except FormulaDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DISAGREEMENT
    except EsSplitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PRECONDITION


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
