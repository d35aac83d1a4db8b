"""Command-line frontend.

Subcommands: classify, quiver, maxweights, dims, fock, simples, defect.
Data goes to stdout, diagnostics to stderr; exit status is 0 on success,
2 on a validation error and 3 when a size guard is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import DEFAULT_MAX_RANK, DominantWeight, GuardError, RootVector
from .classifier import classify
from .fock import expand, hom_dim, parse_word
from .maxweights import beta_of, class_members, defect
from .multiplicity import weight_multiplicity
from .quiver import build_quiver, export
from .tableaux import graded_hom_dim

EXIT_VALIDATION = 2
EXIT_GUARD = 3


def _parse_weight(args) -> DominantWeight:
    ell = args.ell
    if ell < 2:
        raise ValueError("--ell must be at least 2")
    if ell > args.max_rank:
        raise GuardError(f"rank {ell} exceeds the cap of {args.max_rank}")
    if getattr(args, "m", None):
        m = [int(v) for v in args.m.split(",")]
        if len(m) != ell + 1:
            raise ValueError(f"--m needs {ell + 1} entries")
        return DominantWeight(tuple(m))
    if not getattr(args, "weight", None):
        raise ValueError("a weight is required (--weight or --m)")
    charges = [int(v) for v in args.weight.split(",")]
    return DominantWeight.from_charges(charges, ell)


def _parse_beta(args) -> RootVector:
    coeffs = [int(v) for v in args.beta.split(",")]
    if len(coeffs) != args.ell + 1:
        raise ValueError(f"--beta needs {args.ell + 1} entries")
    beta = RootVector(tuple(coeffs))
    if not beta.in_positive_cone():
        raise ValueError("--beta must have nonnegative entries")
    return beta


def _parse_nu(text: str) -> tuple[int, ...]:
    return tuple(int(v) for v in text.split("-"))


def _cmd_classify(args) -> str:
    weight = _parse_weight(args)
    verdict = classify(weight, _parse_beta(args), args.char)
    if args.format == "json":
        return json.dumps({
            "type": str(verdict.rep_type),
            "tag": verdict.tag,
            "char_assumption": verdict.char_assumption,
        }, ensure_ascii=False)
    return str(verdict)


def _cmd_quiver(args) -> str:
    weight = _parse_weight(args)
    quiver = build_quiver(weight, max_vertices=args.max_vertices)
    if args.format == "text":
        lines = [f"root {weight}  vertices {len(quiver.vertices)}  arrows {len(quiver.arrows)}"]
        for arrow in quiver.arrows:
            lines.append(f"{arrow.source} -> {arrow.target}  {arrow.label}  {arrow.delta}")
        return "\n".join(lines)
    return export(quiver, args.format).rstrip("\n")


def _cmd_maxweights(args) -> str:
    weight = _parse_weight(args)
    members = class_members(weight)
    rows = []
    for member in members:
        datum = beta_of(weight, member)
        rows.append({
            "m": list(member.m),
            "X": list(datum.x.coeffs),
            "beta": str(datum.x),
            "defect": defect(weight, datum.x),
        })
    if args.format == "json":
        return json.dumps({"ell": weight.ell, "root": list(weight.m), "members": rows},
                          ensure_ascii=False)
    lines = []
    for member, row in zip(members, rows):
        lines.append(f"{member}\tX={tuple(row['X'])}\tdefect={row['defect']}")
    return "\n".join(lines)


def _cmd_dims(args) -> str:
    weight = _parse_weight(args)
    beta = _parse_beta(args)
    nu = _parse_nu(args.nu)
    nu2 = _parse_nu(args.nu2) if args.nu2 else nu
    value = graded_hom_dim(weight, beta, nu, nu2, max_n=args.max_n)
    if args.format == "json":
        return json.dumps({
            "nu": list(nu),
            "nu2": list(nu2),
            "dim": {str(e): c for e, c in value.items()},
            "display": str(value),
        }, ensure_ascii=False)
    return str(value)


def _cmd_fock(args) -> str:
    weight = _parse_weight(args)
    word = parse_word(args.word)
    if sum(r for _, r in word) > args.max_n:
        raise GuardError(f"word adds {sum(r for _, r in word)} boxes, cap is {args.max_n}")
    vector = expand(weight, word)
    end = hom_dim(vector, vector)
    if args.format == "json":
        return json.dumps({
            "charges": list(vector.charges),
            "terms": [{"multipartition": [list(p) for p in mp.components],
                       "coeff": str(c)} for mp, c in vector.terms],
            "end_dim": str(end),
        }, ensure_ascii=False)
    return f"{vector}\nEnd = {end}"


def _cmd_simples(args) -> str:
    weight = _parse_weight(args)
    count = weight_multiplicity(weight, _parse_beta(args), max_height=args.max_n)
    if args.format == "json":
        return json.dumps({"simples": count})
    return str(count)


def _cmd_defect(args) -> str:
    weight = _parse_weight(args)
    value = defect(weight, _parse_beta(args))
    if args.format == "json":
        return json.dumps({"defect": value})
    return str(value)


def _add_common(sub, *, weight=True, beta=False, fmt=("text", "json")) -> None:
    sub.add_argument("--ell", type=int, required=True, help="rank, at least 2")
    sub.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)
    if weight:
        sub.add_argument("--weight", help="fundamental indices with repetition, e.g. 0,0,2")
        sub.add_argument("--m", help="multiplicity vector alternative, e.g. 2,0,1")
    if beta:
        sub.add_argument("--beta", required=True,
                         help="root coefficients x0,x1,...,xl")
    sub.add_argument("--format", choices=fmt, default=fmt[0])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrc",
        description="Exact computations for cyclotomic KLR algebras in affine type C.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="representation type of a block")
    _add_common(p, beta=True)
    p.add_argument("--char", type=int, default=0, help="field characteristic (0 or a prime)")
    p.set_defaults(func=_cmd_classify)

    p = subs.add_parser("quiver", help="directed quiver on the dominant maximal weights")
    _add_common(p, fmt=("text", "dot", "json", "tsv"))
    p.add_argument("--max-vertices", type=int, default=5000)
    p.set_defaults(func=_cmd_quiver)

    p = subs.add_parser("maxweights", help="class members with minimal solution vectors")
    _add_common(p)
    p.set_defaults(func=_cmd_maxweights)

    p = subs.add_parser("dims", help="graded dimension of an idempotent truncation")
    _add_common(p, beta=True)
    p.add_argument("--nu", required=True, help="residue sequence, e.g. 0-1-2-1")
    p.add_argument("--nu2", help="second residue sequence (defaults to --nu)")
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=_cmd_dims)

    p = subs.add_parser("fock", help="expand a divided-power word at the vacuum")
    _add_common(p)
    p.add_argument("--word", required=True,
                   help="factors i^r,...; the leftmost factor acts last, e.g. 0,1^2,0")
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=_cmd_fock)

    p = subs.add_parser("simples", help="number of simple modules of a block")
    _add_common(p, beta=True)
    p.add_argument("--max-n", type=int, default=14)
    p.set_defaults(func=_cmd_simples)

    p = subs.add_parser("defect", help="defect of a block")
    _add_common(p, beta=True)
    p.set_defaults(func=_cmd_defect)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = args.func(args)
    except GuardError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
