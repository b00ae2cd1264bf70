"""Acceptance criteria 1-8.

Each criterion is a list of named exact checks.  Running the module prints one
PASS/FAIL line per criterion, both under pytest and as a script:

    python tests/test_acceptance.py
"""
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from qhkit.algebra import is_commutative, radical, socle  # noqa: E402
from qhkit.duality import check_bgg, ringel_transfer, transfer_round_trip  # noqa: E402
from qhkit.field import FieldSpec  # noqa: E402
from qhkit.ideals import hom_space, opposite_transport  # noqa: E402
from qhkit.linalg import Matrix, Subspace, rref, sum_all  # noqa: E402
from qhkit.qh import check_1qh  # noqa: E402
from qhkit.relations import check_listed_relations, corner_pair  # noqa: E402
from qhkit.report import run_command  # noqa: E402

from conftest import BAD, GOOD, case, fixture_path, span  # noqa: E402

# Every check below is an exact equality.  The only numeric tolerance is the
# wall-clock budget per criterion.
RUNTIME_LIMIT_S = 10.0
RANDOM_SEED = 20240607
RANDOM_SUBSPACES = 200
RANDOM_AMBIENT_DIM = 6

A1_RELATIONS = ["646 = 0", "6421 = 6531", "464 = 424", "242 = 212", "213 = 0",
                "656 = 0", "1246 = 1356", "565 = 535", "353 = 313", "312 = 0"]
SIGMA_L3 = (6, 5, 4, 3, 2, 1)
TAU_EX412_L1 = (6, 4, 5, 2, 3, 1)


def _bgg(c):
    return check_bgg(c.A, c.presentation, c.B, c.L, c.poset)


def criterion_1():
    F13 = FieldSpec.prime(13)
    checks = [("5^2 = -1 in F13", F13.reduce(5 * 5) == F13.reduce(-1)),
              ("4^2 - 4 + 1 = 0 in F13", F13.reduce(4 * 4 - 4 + 1) == 0)]
    for name in ("exampleB_L1", "exampleB_L2", "exampleB_L3_F13"):
        checks.append((f"check-ma {name}", case(name).ma.passed))
    checks.append(("L3 is over F13", case("exampleB_L3_F13").B.field == F13))
    return checks


def criterion_2():
    c = case("exampleB_L1")
    P = c.poset
    hasse = {tuple(e) for e in P.hasse()}
    doubled = hasse | {(b, a) for a, b in hasse}
    reading, ok = check_listed_relations(c.A, c.quiver, A1_RELATIONS)
    bqp = c.presentation
    return [
        ("dim A = 63", c.A.dim == 63),
        ("dim A = sum |down(t)|^2", c.A.dim == sum(len(P.down(t)) ** 2 for t in P.elements)),
        ("12 arrows", len(c.quiver.arrows) == 12),
        ("arrows double the covers", set(c.quiver.arrow_pairs()) == doubled),
        ("listed relations vanish", reading != "none" and all(ok)),
        ("quotient block dims equal A", bool(bqp.block_dims_match)
         and all(bqp.quotient_dims.get(ab, 0) == d for ab, d in c.A.dims.items())),
        ("quotient dim 63", sum(bqp.quotient_dims.values()) == 63),
    ]


def criterion_3():
    checks = []
    for name in ("exampleB_L1", "exampleB_L2", "ex412_L1"):
        c = case(name)
        r = check_1qh(c.A, c.poset)
        checks.append((f"check-1qh {name}", r.passed))
        if name == "exampleB_L1":
            checks.append(("standard dims (1,2,2,3,3,6)", r.standard_dims == [1, 2, 2, 3, 3, 6]))
            simple = [1, 0, 0, 0, 0, 0]
            checks.append(("soc P(j) simple at 1", all(w == simple for w in r.socles["P"].values())))
    return checks


def criterion_4():
    checks = []
    for name in ("exampleB_L1", "exampleB_L2", "exampleB_L3_F13"):
        r = _bgg(case(name))
        checks.append((f"{name} all true", r.commutative and r.reversal_closed and r.m4_criterion))
    r = _bgg(case("B4_nonsym"))
    checks.append(("B4 nonsymmetric all false",
                   not (r.commutative or r.reversal_closed or r.m4_criterion)))
    r = _bgg(case("B4_identity"))
    checks.append(("B4 identity all true", r.commutative and r.reversal_closed and r.m4_criterion))
    for name in GOOD:
        checks.append((f"{name} booleans equal", _bgg(case(name)).all_equal))
    return checks


def criterion_5():
    r1 = ringel_transfer(case("ex412_L1").B, case("ex412_L1").L, case("ex412_L1").poset)
    c2 = case("ex412_L2")
    r2 = ringel_transfer(c2.B, c2.L, c2.poset)
    checks = [("ex412 L1 in image", r1.yhat_member),
              (f"ex412 L1 permutation = {TAU_EX412_L1}", r1.self_duality == TAU_EX412_L1),
              ("ex412 L2 not in image", not r2.yhat_member),
              ("ex412 L2 socle witness of dim 2", 2 in r2.socle_witnesses.values()),
              ("ex412 L2 transfer of L(3) = <x^2 - y>",
               r2.transferred[2].space == span(c2, "x^2 - y", "x^3", "x^4"))]
    for name in GOOD:
        c = case(name)
        rt = ringel_transfer(c.B, c.L, c.poset, with_yhat=False)
        checks.append((f"{name} min -> socle", rt.transferred[0].space == socle(c.B)))
        checks.append((f"{name} max -> B",
                       rt.transferred[-1].space == Subspace.full(c.B.field, c.B.dim)))
    return checks


def criterion_6():
    c = case("exampleB_L3_F13")
    rt = ringel_transfer(c.B, c.L, c.poset)
    return [("L3 in image", rt.yhat_member),
            (f"permutation = {SIGMA_L3}", rt.self_duality == SIGMA_L3)]


def _random_subspace(rng, field, p):
    n = RANDOM_AMBIENT_DIM
    k = rng.randint(0, n)
    lo, hi = (0, p - 1) if p else (-5, 5)
    return Subspace.span(field, n, [field.vector([rng.randint(lo, hi) for _ in range(n)])
                                    for _ in range(k)])


def _linalg_laws(field, p, rng):
    ok_mod = ok_idem = True
    for _ in range(RANDOM_SUBSPACES):
        U, V, W = (_random_subspace(rng, field, p) for _ in range(3))
        Wu = W & U
        ok_mod &= (Wu + V) & U == Wu + (V & U)
        m = Matrix.from_rows(field, [list(b) for b in V.basis] or [field.zeros(RANDOM_AMBIENT_DIM)])
        once = rref(m)[0]
        ok_idem &= rref(once)[0] == once
    return ok_mod, ok_idem


def criterion_7():
    checks = []
    for name in GOOD:
        c = case(name)
        P, B = c.poset, c.B
        checks.append((f"{name} dim L(i) = |up(i)|",
                       [M.dim for M in c.L] == [len(P.up(i)) for i in P.elements]))
        checks.append((f"{name} Hom dims", all(
            hom_space(c.L[j - 1], c.L[k - 1]).dim == len(P.up(j) & P.up(k))
            for j in P.elements for k in P.elements)))
        covers_of_1 = [hi for lo, hi in P.hasse() if lo == 1]
        checks.append((f"{name} rad B = sum over covers of 1",
                       sum_all(B.field, B.dim, [c.L[i - 1].space for i in covers_of_1]) == radical(B)))
        Bp, Lp = corner_pair(c.presentation, 1, P)
        checks.append((f"{name} corner round trip",
                       Bp.dim == B.dim and is_commutative(Bp) == is_commutative(B)
                       and [M.dim for M in Lp] == [M.dim for M in c.L]))
        rt = ringel_transfer(B, c.L, P)
        if rt.yhat_member:
            checks.append((f"{name} transfer round trip", transfer_round_trip(B, c.L, P, rt).passed))
    for name in GOOD + BAD + ["bad_broken_b"]:
        c = case(name)
        checks.append((f"{name} transport agrees",
                       opposite_transport(c.B, c.L, c.poset).passed == c.ma.passed))
    rng = random.Random(RANDOM_SEED)
    for fname, field, p in (("Q", FieldSpec.rationals(), None), ("F13", FieldSpec.prime(13), 13)):
        ok_mod, ok_idem = _linalg_laws(field, p, rng)
        checks.append((f"modular law over {fname}", ok_mod))
        checks.append((f"rref idempotent over {fname}", ok_idem))
    return checks


NEGATIVE = {
    "bad_broken_b": ("fail", "condition_b"),
    "bad_swapped": ("fail", "condition_b"),
    "bad_mislabeled_min": ("fail", "labeling"),
    "bad_not_prime": ("error", None),
}


def criterion_8():
    checks = []
    for name, (status, check) in NEGATIVE.items():
        r, code = run_command("check-ma", fixture_path(name).read_text())
        checks.append((f"{name} status {status}", r["status"] == status))
        if status == "error":
            err = r["error"]
            checks.append((f"{name} error located",
                           bool(err["message"]) and err["line"] is not None
                           and err["column"] is not None and code == 2))
        else:
            sec = r["check_ma"]
            failed = [c["name"] for c in sec["checks"] if not c["passed"]]
            checks.append((f"{name} fails {check}", check in failed and code == 1))
            checks.append((f"{name} witnesses populated", bool(sec["witnesses"]) or check == "labeling"))
            if check == "labeling":
                lab = next(c for c in sec["checks"] if c["name"] == "labeling")
                checks.append((f"{name} labeling witness", lab["minima"] == [2]))
    return checks


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def evaluate(n):
    start = time.perf_counter()
    checks = CRITERIA[n]()
    elapsed = time.perf_counter() - start
    checks.append((f"runtime under {RUNTIME_LIMIT_S:g} s", elapsed < RUNTIME_LIMIT_S))
    failed = [label for label, ok in checks if not ok]
    line = f"criterion {n}: {'FAIL' if failed else 'PASS'} ({elapsed:.2f} s)"
    if failed:
        line += " failing: " + "; ".join(failed)
    return line, failed


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    line, failed = evaluate(n)
    with capsys.disabled():
        print("\n" + line)
    assert not failed, line


if __name__ == "__main__":
    bad = 0
    for n in sorted(CRITERIA):
        line, failed = evaluate(n)
        print(line)
        bad += bool(failed)
    sys.exit(1 if bad else 0)
