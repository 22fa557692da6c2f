"""Batch verification suites over (type, rank, lambda, w) matrices.

Each runner returns a JSON-ready report: one cell per matrix entry with a
pass/violation status, plus a top-level status that is "pass" only when every
cell passed ("partial" when a time budget ran out, with the remaining cells
unlisted).
"""

from __future__ import annotations

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor

from . import crystals, faces
from .cartan import (
    RootDatum,
    all_elements,
    length,
    longest_element,
    multiply,
    reduced_word,
)


class BudgetExceeded(Exception):
    pass


def dominant_weights(rank: int, max_coeff: int):
    return [tuple(t) for t in itertools.product(range(max_coeff + 1), repeat=rank)]


def _finish(report, cells, start, partial=False):
    report["cells"] = cells
    report["elapsed_seconds"] = round(time.time() - start, 3)
    if partial:
        report["status"] = "partial"
    elif any(c["status"] != "pass" for c in cells):
        report["status"] = "violation"
    else:
        report["status"] = "pass"
    return report


def _theorem_cell(args):
    kind, family, rank, lam, word = args
    datum = RootDatum(family, rank)
    from .cartan import word_to_element

    w = word_to_element(datum, word)
    cell = {
        "theorem": kind,
        "type": family,
        "rank": rank,
        "lambda": list(lam),
        "w": list(word),
        "status": "pass",
        "n_faces": 0,
        "n_lattice_points": 0,
        "mismatches": [],
    }
    try:
        if kind == "theorem1":
            dec = faces.opposite_demazure_faces(datum, w, lam)
            model_count = faces.model_face_union_count(datum, lam, dec.tights + dec.empty, "F")
        else:
            dec = faces.demazure_faces(datum, w, lam)
            model_count = faces.model_face_union_count(datum, lam, dec.tights + dec.empty, "Fv")
        cell["n_faces"] = len(dec.tights)
        cell["n_lattice_points"] = len(dec.union)
        if model_count != len(dec.union):
            cell["status"] = "violation"
            cell["mismatches"].append(
                {"kind": "model-face-union-count", "model": model_count, "string": len(dec.union)}
            )
    except faces.TheoremViolationError as err:
        cell["status"] = "violation"
        cell["mismatches"].append(err.payload)
    return cell


def theorem_suite(kind: str, family: str, rank: int, lambda_max: int, jobs=1, budget=None):
    """kind is "theorem1" (opposite side), "theorem2" (type A Demazure side),
    or "theorem3" (type C Demazure side)."""
    if kind == "theorem2" and family != "A":
        raise ValueError("theorem2 is the type A statement")
    if kind == "theorem3" and family != "C":
        raise ValueError("theorem3 is the type C statement")
    datum = RootDatum(family, rank)
    start = time.time()
    tasks = [
        (kind, family, rank, lam, tuple(reduced_word(w)))
        for lam in dominant_weights(rank, lambda_max)
        for w in all_elements(datum)
    ]
    report = {"theorem": kind, "type": family, "rank": rank, "lambda_max": lambda_max}
    cells = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for cell in pool.map(_theorem_cell, tasks, chunksize=8):
                cells.append(cell)
                if budget is not None and time.time() - start > budget:
                    return _finish(report, cells, start, partial=True)
    else:
        for task in tasks:
            cells.append(_theorem_cell(task))
            if budget is not None and time.time() - start > budget:
                return _finish(report, cells, start, partial=True)
    cells.sort(key=lambda c: (c["lambda"], c["w"]))
    return _finish(report, cells, start)


def duality_suite(family: str, rank: int, budget=None):
    """Complementary-length pairings: 1 exactly on Poincare-dual pairs."""
    datum = RootDatum(family, rank)
    start = time.time()
    ctx = faces.default_context(datum)
    w0 = longest_element(datum)
    big_n = datum.num_positive_roots
    cells = []
    report = {"theorem": "duality", "type": family, "rank": rank}
    for u in all_elements(datum):
        for v in all_elements(datum):
            if length(u) + length(v) != big_n:
                continue
            cell = {
                "theorem": "duality",
                "type": family,
                "rank": rank,
                "u": list(reduced_word(u)),
                "v": list(reduced_word(v)),
                "status": "pass",
                "mismatches": [],
            }
            expected = 1 if v == multiply(w0, u) else 0
            try:
                got = faces.degree_pairing(datum, u, v, ctx)
                cell["pairing"] = got
                if got != expected:
                    cell["status"] = "violation"
                    cell["mismatches"].append({"expected": expected, "got": got})
            except faces.PairingUnresolvedError as err:
                cell["status"] = "unresolved"
                cell["mismatches"].append({"unresolved": str(err)})
            cells.append(cell)
            if budget is not None and time.time() - start > budget:
                return _finish(report, cells, start, partial=True)
    # unresolved pairings are reported, not silently scored; only a wrong
    # resolved number is a violation
    report["unresolved"] = sum(1 for c in cells if c["status"] == "unresolved")
    report["cells"] = cells
    report["elapsed_seconds"] = round(time.time() - start, 3)
    report["status"] = (
        "violation" if any(c["status"] == "violation" for c in cells) else "pass"
    )
    return report


def products_suite(family: str, rank: int, budget=None):
    """Every product of two opposite classes against the divided-difference
    oracle."""
    datum = RootDatum(family, rank)
    start = time.time()
    ctx = faces.default_context(datum)
    cells = []
    report = {"theorem": "products", "type": family, "rank": rank}
    for v in all_elements(datum):
        for w in all_elements(datum):
            cell = {
                "theorem": "products",
                "type": family,
                "rank": rank,
                "v": list(reduced_word(v)),
                "w": list(reduced_word(w)),
                "status": "pass",
                "mismatches": [],
            }
            try:
                result = faces.product_c(datum, v, w, ctx)
                cell["method"] = result.method
                cell["identified"] = result.expansion is not None
                if result.expansion is None:
                    cell["status"] = "violation"
                    cell["mismatches"].append({"kind": "unidentified"})
            except faces.TheoremViolationError as err:
                cell["status"] = "violation"
                cell["mismatches"].append(err.payload)
            cells.append(cell)
            if budget is not None and time.time() - start > budget:
                return _finish(report, cells, start, partial=True)
    return _finish(report, cells, start)


def axioms_suite(family: str, rank: int, samples: int, seed: int = 0, budget=None):
    """Randomized crystal-axiom checks on elements sampled by lowering walks."""
    datum = RootDatum(family, rank)
    rng = random.Random(seed)
    start = time.time()
    word = crystals.standard_word(datum)
    n = datum.rank
    alphas = [crystals.simple_root_in_fundamental(datum, i) for i in range(1, n + 1)]
    cells = []
    report = {"theorem": "axioms", "type": family, "rank": rank, "samples": samples, "seed": seed}
    lam_pool = [None, (1,) * n, (2,) + (1,) * (n - 1)]
    for t in range(samples):
        lam = lam_pool[t % len(lam_pool)]
        state = (0,) * len(word)
        for _ in range(rng.randrange(0, 12)):
            i = rng.randrange(1, n + 1)
            nxt = crystals.f_op(datum, word, lam, state, i)
            if nxt is not None:
                state = nxt
        cell = {"sample": t, "lambda": None if lam is None else list(lam), "status": "pass",
                "mismatches": []}
        for i in range(1, n + 1):
            eps = crystals.epsilon(datum, word, lam, state, i)
            phi = crystals.phi(datum, word, lam, state, i)
            wt = crystals.weight_of(datum, word, lam, state)
            checks = [("phi-eps-wt", phi == eps + wt[i - 1])]
            down = crystals.f_op(datum, word, lam, state, i)
            if down is not None:
                wt2 = crystals.weight_of(datum, word, lam, down)
                checks.extend(
                    [
                        ("wt-f", wt2 == tuple(a - b for a, b in zip(wt, alphas[i - 1]))),
                        ("eps-f", crystals.epsilon(datum, word, lam, down, i) == eps + 1),
                        ("phi-f", crystals.phi(datum, word, lam, down, i) == phi - 1),
                        ("e-f", crystals.e_op(datum, word, lam, down, i) == state),
                    ]
                )
            up = crystals.e_op(datum, word, lam, state, i)
            if up is not None:
                checks.append(("f-e", crystals.f_op(datum, word, lam, up, i) == state))
            for name, ok in checks:
                if not ok:
                    cell["status"] = "violation"
                    cell["mismatches"].append({"axiom": name, "letter": i, "state": list(state)})
        cells.append(cell)
        if budget is not None and time.time() - start > budget:
            return _finish(report, cells, start, partial=True)
    return _finish(report, cells, start)
