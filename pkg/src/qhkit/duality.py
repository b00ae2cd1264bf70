"""Path reversal / commutativity equivalence, and the Ringel-duality transfer
of a family of ideals."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import is_commutative
from .algebra_core import FiniteAlgebra
from .ideals import (IdealModule, MaReport, _rad, check_condition_ma, cover_multiplier,
                     module_radical, surjects)
from .linalg import Subspace, _kernel_vectors, sum_all
from .paths import PathCombination
from .poset import Poset
from .relations import (_by_block, path_values, reverse_combination, verify_relations)


# commutativity and path reversal


@dataclass
class BGGReport:
    commutative: bool
    reversal_closed: bool
    m4_criterion: bool
    counterexample: dict | None = None

    @property
    def all_equal(self):
        return self.commutative == self.reversal_closed == self.m4_criterion

    def to_dict(self):
        return {"commutative": self.commutative, "reversal_closed": self.reversal_closed,
                "m4_criterion": self.m4_criterion, "all_equal": self.all_equal,
                "counterexample": self.counterexample}


def _reversal_closed(A, bqp):
    """Is the kernel of KQ -> A mapped into itself by path reversal?

    Reversal preserves length, so checking the kernel on all paths of length
    <= degree_cap settles every degree slice at once.
    """
    q, f = bqp.quiver, A.field
    vals = path_values(A, q, bqp.degree_cap)
    by_block = _by_block(q, list(vals))
    for ab, ps in sorted(by_block.items()):
        dim = A.dims[ab]
        if not dim:
            continue
        rows = [[vals[p][1][r] for p in ps] for r in range(dim)]
        rev = [vals[q.reverse_path(p)][1] for p in ps]
        rdim = A.dims[(ab[1], ab[0])]
        for v in _kernel_vectors(f, rows, len(ps)):
            img = [f.reduce(sum(c * w[r] for c, w in zip(v, rev) if c)) for r in range(rdim)]
            if any(img):
                combo = PathCombination(q, tuple((c, p) for c, p in zip(v, ps) if c), f)
                return False, combo
    return True, None


def step_multipliers(B: FiniteAlgebra, L, poset: Poset, s, t):
    """(b, d) with x_s * b = x_t * d for the cover step s -> t."""
    one = B.unit
    xs, xt = L[s - 1].generator, L[t - 1].generator
    if poset.lt(s, t):
        return cover_multiplier(B, xs, xt), list(one)
    return list(one), cover_multiplier(B, xt, xs)


def m4_criterion(B: FiniteAlgebra, L, poset: Poset, quiver, length=4):
    """x_{i0} b_1...b_m = x_{im} d_m...d_1 along every path of the given length."""
    mult = {}
    for s, t in quiver.arrow_pairs():
        if s != t:
            mult[(s, t)] = step_multipliers(B, L, poset, s, t)
    for p in quiver.paths_of_length(length):
        seq = quiver.vertex_sequence(p)
        steps = [mult[(a, b)] for a, b in zip(seq, seq[1:])]
        lhs = list(L[seq[0] - 1].generator)
        for b, _ in steps:
            lhs = B.multiply(lhs, b)
        rhs = list(L[seq[-1] - 1].generator)
        for _, d in reversed(steps):
            rhs = B.multiply(rhs, d)
        if lhs != rhs:
            return False, {"path": ",".join(map(str, seq)),
                           "lhs": [B.field.to_str(x) for x in lhs],
                           "rhs": [B.field.to_str(x) for x in rhs]}
    return True, None


def check_bgg(A, bqp, B: FiniteAlgebra, L, poset: Poset) -> BGGReport:
    comm = is_commutative(B)
    closed, _ = _reversal_closed(A, bqp)
    m4, m4_wit = m4_criterion(B, L, poset, bqp.quiver)
    counter = None
    if not closed:
        rels = bqp.relations
        flags = verify_relations(A, bqp.quiver, [reverse_combination(r) for r in rels])
        for r, ok in zip(rels, flags):
            if not ok:
                counter = {"relation": str(r), "reversed": str(reverse_combination(r))}
                break
    if counter is None and m4_wit is not None:
        counter = m4_wit
    return BGGReport(comm, closed, m4, counter)


# Ringel transfer


@dataclass
class RingelTransfer:
    transferred: list  # IdealModule per i (generator None when not local)
    local: list
    kernel_dims: list
    quotient_dims: list
    socle_witnesses: dict
    realizations_isomorphic: list = dc_field(default_factory=list)
    yhat_member: bool = False
    yhat_report: MaReport | None = None
    self_duality: tuple | None = None
    notes: list = dc_field(default_factory=list)

    @property
    def realizations_agree(self):
        return self.kernel_dims == self.quotient_dims

    def to_dict(self):
        B = self.transferred[0].algebra if self.transferred else None
        gens = []
        for M in self.transferred:
            gens.append(None if M.generator is None else
                        [B.field.to_str(x) for x in M.generator])
        return {"yhat_member": self.yhat_member,
                "dims": [M.dim for M in self.transferred],
                "local": self.local,
                "generators": gens,
                "kernel_dims": self.kernel_dims, "quotient_dims": self.quotient_dims,
                "realizations_agree": self.realizations_agree,
                "realizations_isomorphic": self.realizations_isomorphic,
                "socle_witnesses": {str(k): v for k, v in self.socle_witnesses.items()},
                "yhat_check": None if self.yhat_report is None else self.yhat_report.to_dict(),
                "self_duality": None if self.self_duality is None else list(self.self_duality),
                "notes": self.notes}


def _annihilator(B: FiniteAlgebra, x, side) -> Subspace:
    """{b : b*x = 0} (side "left") or {b : x*b = 0} (side "right")."""
    f = B.field
    if side == "left":
        cols = [B.multiply(B.basis_vector(k), x) for k in range(B.dim)]
    else:
        cols = [B.multiply(x, B.basis_vector(k)) for k in range(B.dim)]
    rows = [[cols[c][r] for c in range(B.dim)] for r in range(B.dim)]
    return Subspace.span(f, B.dim, _kernel_vectors(f, rows, B.dim))


def transfer_kernel(B: FiniteAlgebra, x) -> Subspace:
    """Kernel of the surjection B ->> L(j) used by the transfer: b -> x*b.

    For a two-sided local ideal L(j) = B*x = x*B this is a two-sided ideal.  It
    agrees with the left annihilator when B is commutative; for noncommutative B
    only this side makes the kernel form isomorphic to the quotient form.
    """
    return _annihilator(B, x, "right")


def _left_socle_mod(B: FiniteAlgebra, S: Subspace) -> int:
    """dim of {b : rad*b ⊆ S} / S."""
    f = B.field
    rows = []
    for r in _rad(B).basis:
        cols = [S.reduce(B.multiply(r, B.basis_vector(k))) for k in range(B.dim)]
        rows.extend([cols[c][t] for c in range(B.dim)] for t in range(B.dim))
    pre = Subspace.span(f, B.dim, _kernel_vectors(f, rows, B.dim)) if rows else \
        Subspace.full(f, B.dim)
    return pre.dim - S.dim


def _left_radical(B, V: Subspace) -> Subspace:
    return Subspace.span(B.field, B.dim, [B.multiply(r, v) for r in _rad(B).basis for v in V.basis])


def opposite_relabeling(poset: Poset):
    """The opposite poset with i renamed n+1-i, so that it is again labelled 1..n."""
    n = poset.n
    return poset.opposite().relabel({i: n + 1 - i for i in range(1, n + 1)})


def relabel_family(family):
    return list(reversed(family))


def ringel_transfer(B: FiniteAlgebra, L, poset: Poset, with_yhat=True) -> RingelTransfer:
    f, n = B.field, poset.n
    kernels = {j: transfer_kernel(B, L[j - 1].generator) for j in range(1, n + 1)}
    out, local, kdims, qdims, soc, iso = [], [], [], [], {}, []
    notes = []
    for i in range(1, n + 1):
        forbidden = [j for j in range(1, n + 1) if not poset.leq(j, i)]
        K = Subspace.full(f, B.dim)
        for j in forbidden:
            K = K & kernels[j]
        radK = _left_radical(B, K)
        gen = next((v for v in K.basis if not radK.contains(v)), None)
        is_local = K.dim - radK.dim == 1
        local.append(is_local)
        if not is_local:
            notes.append(f"transfer of L({i}) is not a local ideal")
            gen = None
        out.append(IdealModule(B, K, gen, check=False))
        S = sum_all(f, B.dim, [L[j - 1].space for j in forbidden])
        kdims.append(K.dim)
        qdims.append(B.dim - S.dim)
        # B*y ≅ B/ann(y), so equality of annihilator and S certifies B/S ≅ K
        iso.append(gen is not None and _annihilator(B, gen, "left") == S)
        soc[i] = _left_socle_mod(B, S)
    rt = RingelTransfer(out, local, kdims, qdims, soc, iso, notes=notes)
    if with_yhat:
        yhat_membership(B, L, poset, rt)
        if rt.yhat_member:
            rt.self_duality = self_duality_permutation(B, L, rt)
    return rt


def yhat_membership(B: FiniteAlgebra, L, poset: Poset, rt: RingelTransfer):
    """Does (B, transferred family) satisfy ⊠ for the opposite order?

    The per-vertex socle dimensions in rt.socle_witnesses are a necessary
    condition and are always reported; the verdict comes from the full check.
    """
    report = check_condition_ma(B, relabel_family(rt.transferred), opposite_relabeling(poset))
    rt.yhat_report = report
    rt.yhat_member = report.passed
    return rt.yhat_member, {i: d for i, d in rt.socle_witnesses.items() if d != 1}


def isomorphic_ideals(M: IdealModule, N: IdealModule) -> bool:
    if M.dim != N.dim or M.generator is None or N.generator is None:
        return False
    return surjects(M, N, module_radical(N)) and surjects(N, M, module_radical(M))


def _match(cands):
    """Lexicographically first perfect matching i -> cands[i], or None."""
    n = len(cands)
    used = set()
    chosen = []

    def go(i):
        if i == n:
            return True
        for j in cands[i]:
            if j not in used:
                used.add(j)
                chosen.append(j)
                if go(i + 1):
                    return True
                used.discard(j)
                chosen.pop()
        return False

    return tuple(chosen) if go(0) else None


def self_duality_permutation(B: FiniteAlgebra, L, rt: RingelTransfer):
    """sigma with L(sigma(i)) ≅ transferred(i), or None."""
    n = len(L)
    cands = []
    for M in rt.transferred:
        cands.append([j for j in range(1, n + 1) if isomorphic_ideals(L[j - 1], M)])
        if not cands[-1]:
            return None
    return _match(cands)


@dataclass
class RoundTrip:
    first_in_yhat: bool
    second_passes: bool
    recovers: list  # per i: the kernel of B ->> L(i) is the sum of transferred j with i not <= j
    members_equal: list  # per i: second transfer ≅ L(i) with no twist of B

    @property
    def passed(self):
        return self.first_in_yhat and self.second_passes and all(self.recovers)

    def to_dict(self):
        return {"passed": self.passed, "first_in_yhat": self.first_in_yhat,
                "second_passes": self.second_passes, "recovers": self.recovers,
                "members_equal": self.members_equal}


def transfer_round_trip(B: FiniteAlgebra, L, poset: Poset, rt: RingelTransfer | None = None):
    """Transfer twice and compare with L.

    Pairs are only determined up to an automorphism of B, so the certificate is
    L(i) ≅ B / (sum of transferred j with i not <= j), read off as an equality of
    subspaces with the kernel of B ->> L(i).  The untwisted member comparison is
    reported alongside; it can fail for noncommutative B.
    """
    if rt is None:
        rt = ringel_transfer(B, L, poset)
    f, n = B.field, poset.n
    if not rt.yhat_member:
        return RoundTrip(False, False, [False] * n, [False] * n)
    P2 = opposite_relabeling(poset)
    rt2 = ringel_transfer(B, relabel_family(rt.transferred), P2, with_yhat=False)
    back = relabel_family(rt2.transferred)
    second = check_condition_ma(B, back, poset).passed
    recovers = []
    for i in range(1, n + 1):
        S = sum_all(f, B.dim, [rt.transferred[j - 1].space for j in range(1, n + 1)
                               if not poset.leq(i, j)])
        recovers.append(S == transfer_kernel(B, L[i - 1].generator))
    same = [a.space == b.space or isomorphic_ideals(a, b) for a, b in zip(L, back)]
    return RoundTrip(True, second, recovers, same)
