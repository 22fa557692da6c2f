"""Batch command-line surface.

Subcommands: crystal | faces | pipedreams | product | verify | volume.
Output is JSON (optionally CSV for lattice-point tables) on stdout; --pretty
adds ASCII diagrams.  Exit codes: 0 ok, 1 theorem violation, 2 bad input,
3 time budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import crystals, faces, pipedreams, polytopes, verify
from .cartan import (
    RootDatum,
    length,
    reduced_word,
    standard_word,
    word_to_element,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


class BadInput(ValueError):
    pass


@dataclass
class JobConfig:
    family: str
    rank: int
    word: tuple          # reduced word of the longest element
    lam: tuple
    w: tuple             # letters, applied left to right
    epsilon: tuple
    fmt: str
    pretty: bool
    jobs: int
    seed: int


def _parse_ints(text, what):
    if text is None or text == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise BadInput("%s must be comma-separated integers, got %r" % (what, text))


def _build_config(args) -> JobConfig:
    family = args.type
    rank = args.rank
    if family not in ("A", "C"):
        raise BadInput("--type must be A or C")
    try:
        datum = RootDatum(family, rank)
    except ValueError as err:
        raise BadInput(str(err))
    word = _parse_ints(getattr(args, "word", None), "--word") or standard_word(datum)
    lam = _parse_ints(getattr(args, "lam", None), "--lambda")
    w = _parse_ints(getattr(args, "w", None), "--w")
    eps = _parse_ints(getattr(args, "epsilon", None), "--epsilon")
    for letters, what in ((word, "--word"), (w, "--w")):
        for i in letters:
            if not 1 <= i <= rank:
                raise BadInput("%s letter %d out of range 1..%d" % (what, i, rank))
    if lam and (len(lam) != rank or any(x < 0 for x in lam)):
        raise BadInput("--lambda must list %d nonnegative coefficients" % rank)
    from .cartan import check_word_of_longest

    try:
        check_word_of_longest(datum, word)
    except ValueError as err:
        raise BadInput(str(err))
    return JobConfig(
        family=family,
        rank=rank,
        word=word,
        lam=lam,
        w=w,
        epsilon=eps,
        fmt=getattr(args, "format", "json"),
        pretty=bool(getattr(args, "pretty", False)),
        jobs=getattr(args, "jobs", 1),
        seed=getattr(args, "seed", 0),
    )


def _emit(payload, fmt="json", rows_key=None):
    if fmt == "csv" and rows_key is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        for row in payload[rows_key]:
            writer.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        json.dump(payload, sys.stdout, sort_keys=True, default=str)
        sys.stdout.write("\n")


def cmd_crystal(args) -> int:
    cfg = _build_config(args)
    datum = RootDatum(cfg.family, cfg.rank)
    lam = cfg.lam or (0,) * cfg.rank
    w = word_to_element(datum, cfg.w)
    experimental = not crystals.is_certified_word(datum, cfg.word)
    kind = args.kind
    if kind == "b":
        points = crystals.generate_b_lambda(datum, cfg.word, lam, allow_experimental=experimental)
    elif kind == "demazure":
        points = crystals.demazure_crystal(datum, cfg.word, w, lam, allow_experimental=experimental)
    elif kind == "opposite":
        points = crystals.opposite_demazure_crystal(
            datum, cfg.word, w, lam, allow_experimental=experimental
        )
    elif kind == "richardson":
        v = word_to_element(datum, _parse_ints(args.v, "--v"))
        points = crystals.richardson_lattice_points(
            datum, cfg.word, v, w, lam, allow_experimental=experimental
        )
    else:
        raise BadInput("unknown crystal kind %r" % kind)
    rows = sorted(points)
    payload = {
        "type": cfg.family,
        "rank": cfg.rank,
        "word": list(cfg.word),
        "lambda": list(lam),
        "w": list(cfg.w),
        "kind": kind,
        "experimental": experimental,
        "count": len(rows),
        "rows": [list(r) for r in rows],
    }
    _emit(payload, cfg.fmt, rows_key="rows")
    return EXIT_OK


def cmd_faces(args) -> int:
    cfg = _build_config(args)
    datum = RootDatum(cfg.family, cfg.rank)
    lam = cfg.lam or (1,) * cfg.rank
    w = word_to_element(datum, cfg.w)
    side = args.side
    payload = {
        "type": cfg.family,
        "rank": cfg.rank,
        "word": list(cfg.word),
        "lambda": list(lam),
        "w": list(cfg.w),
        "side": side,
    }
    if side == "schubert" and cfg.word != standard_word(datum):
        raise BadInput("the Demazure side is defined over the standard word only")
    if side == "opposite":
        dec = faces.opposite_demazure_faces(datum, w, lam, word=cfg.word)
        equations = {}
        for tight in dec.tights + dec.empty:
            eqs = []
            for j in tight:
                vec, lam_vec = polytopes.string_lambda_facet(datum, cfg.word, j)
                eqs.append({"coeffs": list(vec), "lambda_coeffs": list(lam_vec)})
            equations[",".join(map(str, tight))] = eqs
        payload["equations"] = equations
    else:
        dec = faces.demazure_faces(datum, w, lam)
        payload["diagrams"] = [
            sorted(map(list, d.boxes))
            for d in sorted(pipedreams.mset(datum, w), key=lambda d: sorted(d.boxes))
        ]
    payload["faces"] = [list(t) for t in dec.tights]
    payload["empty_faces"] = [list(t) for t in dec.empty]
    payload["n_lattice_points"] = len(dec.union)
    payload["volume"] = str(faces.side_volume(datum, side, w, lam))
    if cfg.pretty and side == "schubert":
        payload["ascii"] = [
            pipedreams.ascii_diagram(d)
            for d in sorted(pipedreams.mset(datum, w), key=lambda d: sorted(d.boxes))
        ]
    _emit(payload, cfg.fmt, rows_key="faces")
    return EXIT_OK


def cmd_pipedreams(args) -> int:
    cfg = _build_config(args)
    datum = RootDatum(cfg.family, cfg.rank)
    w = word_to_element(datum, cfg.w)
    op = args.op
    if op == "bottom":
        diagrams = [pipedreams.bottom_diagram(datum, w)]
    elif op == "closure":
        diagrams = sorted(pipedreams.ladder_set(datum, w), key=lambda d: sorted(d.boxes))
    elif op == "mset":
        diagrams = sorted(pipedreams.mset(datum, w), key=lambda d: sorted(d.boxes))
    elif op == "mitosis":
        if cfg.family != "A":
            raise BadInput("mitosis chains are type A only")
        diagrams = sorted(
            pipedreams.mitosis_chain(datum, cfg.w), key=lambda d: sorted(d.boxes)
        )
    else:
        raise BadInput("unknown pipedreams op %r" % op)
    payload = {
        "type": cfg.family,
        "rank": cfg.rank,
        "w": list(cfg.w),
        "op": op,
        "count": len(diagrams),
        "diagrams": [sorted(map(list, d.boxes)) for d in diagrams],
        "k_d": [list(pipedreams.arrangement_kd(d)) for d in diagrams],
        "k_d_prime": [list(pipedreams.arrangement_kd_prime(d)) for d in diagrams],
    }
    if cfg.pretty:
        payload["ascii"] = [pipedreams.ascii_diagram(d) for d in diagrams]
    _emit(payload, cfg.fmt, rows_key="k_d")
    return EXIT_OK


def _profile_from_config(datum, cfg):
    if not cfg.epsilon:
        return None
    n = datum.rank
    if datum.family == "A":
        if len(cfg.epsilon) != n:
            raise BadInput("--epsilon needs %d entries for type A" % n)
        return polytopes.EpsilonProfile("A", cfg.epsilon)
    if len(cfg.epsilon) != 2 * n - 1:
        raise BadInput("--epsilon needs %d entries for type C" % (2 * n - 1))
    return polytopes.EpsilonProfile("C", cfg.epsilon[: n - 1], cfg.epsilon[n - 1 :])


def cmd_product(args) -> int:
    cfg = _build_config(args)
    datum = RootDatum(cfg.family, cfg.rank)
    if cfg.family != "C":
        raise BadInput("product is certified for type C only")
    v = word_to_element(datum, _parse_ints(args.v, "--v"))
    w = word_to_element(datum, cfg.w)
    profile = _profile_from_config(datum, cfg)
    try:
        ctx = faces.DeformedContext(datum, profile=profile) if profile else None
    except ValueError as err:
        raise BadInput(str(err))
    result = faces.product_c(datum, v, w, ctx)
    payload = {
        "v": list(_parse_ints(args.v, "--v")),
        "w": list(cfg.w),
        "faces": [
            {"f": list(r.f_tight), "fv": list(r.fv_tight)} for r in result.faces
        ],
        "corollary_faces": [
            {"f": list(r.f_tight), "fv": list(r.fv_tight)} for r in result.corollary_faces
        ],
        "expansion": None
        if result.expansion is None
        else {",".join(map(str, reduced_word(u))): c for u, c in sorted(
            result.expansion.items(), key=lambda kv: (length(kv[0]), kv[0].oneline)
        )},
        "certified": result.certified,
        "method": result.method,
    }
    _emit(payload, cfg.fmt)
    return EXIT_OK


def cmd_volume(args) -> int:
    cfg = _build_config(args)
    datum = RootDatum(cfg.family, cfg.rank)
    lam = cfg.lam or (1,) * cfg.rank
    w = word_to_element(datum, cfg.w)
    payload = {
        "type": cfg.family,
        "rank": cfg.rank,
        "lambda": list(lam),
        "w": list(cfg.w),
        "schubert_dimension": faces.h0_dimension(datum, "schubert", w, lam),
        "opposite_dimension": faces.h0_dimension(datum, "opposite", w, lam),
        "schubert_volume": str(faces.side_volume(datum, "schubert", w, lam)),
        "opposite_volume": str(faces.side_volume(datum, "opposite", w, lam)),
    }
    _emit(payload, cfg.fmt)
    return EXIT_OK


_VERIFY_RANK_LIMITS = {"A": 4, "C": 3}


def cmd_verify(args) -> int:
    theorem = args.theorem
    family = args.type
    rank = args.rank
    budget = args.budget
    if rank < 2 or rank > _VERIFY_RANK_LIMITS.get(family, 0):
        raise BadInput(
            "verify supports ranks 2..%d for type %s" % (_VERIFY_RANK_LIMITS[family], family)
        )
    if theorem in ("theorem1", "theorem2", "theorem3"):
        report = verify.theorem_suite(
            theorem, family, rank, args.lambda_max, jobs=args.jobs, budget=budget
        )
    elif theorem == "duality":
        report = verify.duality_suite(family, rank, budget=budget)
    elif theorem == "products":
        report = verify.products_suite(family, rank, budget=budget)
    elif theorem == "axioms":
        report = verify.axioms_suite(family, rank, args.samples, seed=args.seed, budget=budget)
    else:
        raise BadInput("unknown theorem %r" % theorem)
    _emit(report)
    if report["status"] == "partial":
        return EXIT_BUDGET
    return EXIT_OK if report["status"] == "pass" else EXIT_VIOLATION


def _add_common(sub, lam=True, word=True, w=True):
    sub.add_argument("--type", required=True, choices=["A", "C"])
    sub.add_argument("--rank", required=True, type=int)
    if word:
        sub.add_argument("--word", help="reduced word of the longest element (default: standard)")
    if lam:
        sub.add_argument("--lambda", dest="lam", help="fundamental coefficients, comma-separated")
    if w:
        sub.add_argument("--w", default="", help="simple-reflection letters, applied left to right")
    sub.add_argument("--epsilon", help="deformation profile entries")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--format", choices=["json", "csv"], default="json")
    sub.add_argument("--pretty", action="store_true")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubcalc",
        description="Exact polyhedral models of Demazure crystals and the "
        "Schubert calculus they carry.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("crystal", help="enumerate crystal subsets in string coordinates")
    _add_common(p)
    p.add_argument("--kind", choices=["b", "demazure", "opposite", "richardson"], default="b")
    p.add_argument("--v", default="", help="second Weyl element for richardson")
    p.set_defaults(func=cmd_crystal)

    p = subs.add_parser("faces", help="face decompositions, equations, lattice unions, volumes")
    _add_common(p)
    p.add_argument("--side", choices=["schubert", "opposite"], default="opposite")
    p.set_defaults(func=cmd_faces)

    p = subs.add_parser("pipedreams", help="bottom diagrams, ladder closures, box-removal sets")
    _add_common(p, lam=False, word=False)
    p.add_argument("--op", choices=["bottom", "closure", "mset", "mitosis"], default="mset")
    p.set_defaults(func=cmd_pipedreams)

    p = subs.add_parser("product", help="product of two opposite Schubert classes (type C)")
    _add_common(p, lam=False, word=False)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_product)

    p = subs.add_parser("volume", help="section-space dimensions and face volumes")
    _add_common(p, word=False)
    p.set_defaults(func=cmd_volume)

    p = subs.add_parser("verify", help="run a verification suite")
    p.add_argument("theorem", choices=["theorem1", "theorem2", "theorem3", "duality", "products", "axioms"])
    p.add_argument("--type", required=True, choices=["A", "C"])
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--lambda-max", dest="lambda_max", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=float, default=None, help="seconds before a partial report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadInput as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_BAD_INPUT
    except (ValueError, faces.PairingUnresolvedError) as err:
        print("error: %s" % err, file=sys.stderr)
        return EXIT_BAD_INPUT
    except faces.TheoremViolationError as err:
        print("theorem violation: %s" % err, file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
