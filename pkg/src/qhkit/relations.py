"""Relations of a bound quiver presentation of A, and the corner algebra round trip."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra_core import FiniteAlgebra
from .ideals import ideal_from_generator
from .linalg import Subspace, _kernel_vectors, solve
from .paths import (CapExceeded, PathCombination, Quiver, parse_path_combination, path_key,
                    quotient, saturate, top_degree_in_ideal, element_of)
from .sparse import SparseEchelon


class RelationError(ValueError):
    pass


@dataclass
class BoundQuiverPresentation:
    quiver: Quiver
    relations: list
    degree_cap: int
    field: object = None
    block_dims_match: bool | None = None
    quotient_dims: dict = dc_field(default_factory=dict)

    def relation_strings(self):
        return [str(r) for r in self.relations]


def evaluate_path(A, quiver, path):
    """(block, vector) value of a path; arrows carry (block, vector) representatives."""
    start, arrows = path
    block, val = (start, start), list(A.identities[start])
    for k in arrows:
        ab, rep = quiver.arrows[k].element
        if ab[0] != block[1]:
            raise RelationError("path does not chain")
        val = A.mul(block, val, ab, rep)
        block = (block[0], ab[1])
    return block, val


def evaluate_combination(A, quiver, combo: PathCombination):
    if combo.is_zero():
        return None, []
    block = combo.endpoints
    f = A.field
    out = f.zeros(A.dims[block])
    for c, p in combo.terms:
        _, v = evaluate_path(A, quiver, p)
        out = [f.reduce(a + c * b) for a, b in zip(out, v)]
    return block, out


def verify_relations(A, quiver, candidates) -> list:
    out = []
    for c in candidates:
        for _, p in c.terms:
            for k in p[1]:
                if k >= len(quiver.arrows):
                    raise RelationError("path uses an unknown arrow")
        _, v = evaluate_combination(A, quiver, c)
        out.append(not any(v))
    return out


def check_listed_relations(A, quiver, texts):
    """Evaluate relations written as vertex sequences under both readings.

    Returns (reading, results) for the first reading under which all hold,
    else ("none", traversal results).
    """
    results = {}
    for reading in ("traversal", "reversed"):
        combos = []
        for t in texts:
            c = parse_path_combination(quiver, t, A.field)
            if reading == "reversed":
                c = PathCombination(quiver, tuple((x, quiver.reverse_path(p)) for x, p in c.terms),
                                    A.field)
            combos.append(c)
        results[reading] = verify_relations(A, quiver, combos)
        if all(results[reading]):
            return reading, results[reading]
    return "none", results["traversal"]


def _by_block(quiver, paths):
    out = {}
    for p in paths:
        out.setdefault((p[0], quiver.end(p)), []).append(p)
    return out


def _nilpotency_index(A):
    return len(A.radical_chain())


def path_values(A, quiver, degree):
    """Values of every path of length <= degree, computed by extension."""
    vals = {}
    layer = [(v, ()) for v in A.vertices]
    for p in layer:
        vals[p] = ((p[0], p[0]), list(A.identities[p[0]]))
    for _ in range(degree):
        nxt = []
        for p in layer:
            blk, v = vals[p]
            for k in quiver.out_arrows[quiver.end(p)]:
                ab, rep = quiver.arrows[k].element
                q = (p[0], p[1] + (k,))
                vals[q] = ((blk[0], ab[1]), A.mul(blk, v, ab, rep))
                nxt.append(q)
        layer = nxt
    return vals


def extract_relations(A, quiver: Quiver, degree_cap=None, verify=True) -> BoundQuiverPresentation:
    """Generators of the kernel of KQ -> A, degree by degree.

    In degree d the new generators span T_d / (arrows*T_{d-1} + T_{d-1}*arrows),
    where T_d is the set of length-d combinations whose value lies in the span of
    shorter paths; each is completed with a shorter tail so that it evaluates to 0.
    """
    f = A.field
    N = degree_cap if degree_cap is not None else _nilpotency_index(A)
    vals = path_values(A, quiver, N)
    # per block: chosen shorter paths whose values form a basis of the span so far
    chosen = {ab: [] for ab in A.blocks()}
    spans = {ab: A.zero_space(ab) for ab in A.blocks()}
    relations = []
    prev_T = []  # list of dicts path -> coeff
    for d in range(0, N + 1):
        layer = quiver.paths_of_length(d)
        by_block = _by_block(quiver, layer)
        T = []
        for ab, ps in sorted(by_block.items()):
            E = spans[ab]
            cols = [E.reduce(vals[p][1]) for p in ps]
            dim = A.dims[ab]
            rows = [[cols[c][r] for c in range(len(ps))] for r in range(dim)]
            kern = _kernel_vectors(f, rows, len(ps)) if dim else \
                [f.unit_vector(len(ps), i) for i in range(len(ps))]
            for v in kern:
                T.append({ps[k]: x for k, x in enumerate(v) if x})
        if d >= 1:
            index = {p: k for k, p in enumerate(layer)}
            ech = SparseEchelon(f)
            for tau in prev_T:
                p0 = next(iter(tau))
                start, end = p0[0], quiver.end(p0)
                for a in quiver.in_arrows[start]:
                    ech.insert({index[(quiver.arrows[a].source, (a,) + p[1])]: x
                                for p, x in tau.items()})
                for a in quiver.out_arrows[end]:
                    ech.insert({index[(p[0], p[1] + (a,))]: x for p, x in tau.items()})
            for tau in T:
                if ech.insert({index[p]: x for p, x in tau.items()}) is None:
                    continue
                p0 = next(iter(tau))
                ab = (p0[0], quiver.end(p0))
                total = f.zeros(A.dims[ab])
                for p, x in tau.items():
                    total = [f.reduce(a + x * b) for a, b in zip(total, vals[p][1])]
                terms = list((x, p) for p, x in tau.items())
                if any(total):
                    sel = chosen[ab]
                    c = solve(f, [vals[q][1] for q in sel], total)
                    if c is None:
                        raise RelationError("top-degree part is not reducible")
                    terms += [(f.reduce(-x), q) for x, q in zip(c, sel) if x]
                relations.append(PathCombination(quiver, tuple(terms), f))
        # extend the spans by this layer
        for ab, ps in by_block.items():
            for p in ps:
                if not spans[ab].contains(vals[p][1]):
                    chosen[ab].append(p)
                    spans[ab] = spans[ab].sum(A.span(ab, [vals[p][1]]))
        prev_T = T
    nonzero_top = [p for p in quiver.paths_of_length(N) if any(vals[p][1])]
    if nonzero_top:
        raise CapExceeded(f"paths of length {N} are not zero; raise the degree cap")
    for ab in A.blocks():
        if spans[ab].dim != A.dims[ab]:
            raise RelationError(f"evaluation is not onto the block {ab}")
    bqp = BoundQuiverPresentation(quiver, relations, N, f)
    if verify:
        verify_presentation(A, bqp)
    return bqp


def _relation_dicts(bqp):
    return [{p: c for c, p in r.terms} for r in bqp.relations]


def verify_presentation(A, bqp):
    """Check that every relation vanishes and dim KQ/<relations> = dim A per block."""
    if not all(verify_relations(A, bqp.quiver, bqp.relations)):
        raise RelationError("an emitted relation does not vanish")
    pq = saturate(bqp.quiver, bqp.field, _relation_dicts(bqp), bqp.degree_cap)
    if not top_degree_in_ideal(pq):
        bqp.block_dims_match = False
        return False
    dims = pq.block_dims()
    bqp.quotient_dims = dims
    bqp.block_dims_match = all(dims.get(ab, 0) == A.dims[ab] for ab in A.blocks())
    if not bqp.block_dims_match:
        raise RelationError("KQ modulo the emitted relations has the wrong block dimensions")
    return True


def reverse_combination(c: PathCombination) -> PathCombination:
    q = c.quiver
    return PathCombination(q, tuple((x, q.reverse_path(p)) for x, p in c.terms), c.field)


# corner algebra


def _return_path(quiver, v, i, poset=None):
    """Vertex sequence v -> ... -> i -> ... -> v: up a chain, back the same way."""
    if poset is not None and poset.leq(v, i):
        up = poset.chain(v, i)
    else:
        # lexicographically first shortest walk
        from collections import deque
        prev = {v: None}
        dq = deque([v])
        while dq:
            u = dq.popleft()
            for k in sorted(quiver.out_arrows[u], key=lambda k: quiver.arrows[k].target):
                t = quiver.arrows[k].target
                if t not in prev:
                    prev[t] = u
                    dq.append(t)
        if i not in prev:
            raise RelationError(f"vertex {i} is not reachable from {v}")
        up = [i]
        while up[-1] != v:
            up.append(prev[up[-1]])
        up.reverse()
    return up + up[-2::-1]


def corner_pair(bqp: BoundQuiverPresentation, v: int, poset=None, cap=64):
    """B' = e_v A e_v for A = KQ/<relations>, and the ideals generated by the
    cycles p(v, i, v)."""
    q, f = bqp.quiver, bqp.field
    if not 1 <= v <= q.n:
        raise RelationError(f"{v} is not a vertex")
    pq = quotient(q, f, _relation_dicts(bqp), start_degree=bqp.degree_cap or 1, cap=cap)
    corner = [p for p in pq.basis if p[0] == v and q.end(p) == v]
    pos = {p: k for k, p in enumerate(pq.basis)}
    cpos = {p: k for k, p in enumerate(corner)}
    m = len(corner)

    def to_corner(vec):
        out = f.zeros(m)
        for p, k in pos.items():
            if vec[k]:
                if p not in cpos:
                    raise RelationError("corner product leaves the corner")
                out[cpos[p]] = vec[k]
        return out

    table = []
    for a in corner:
        row = []
        for b in corner:
            prod = q.concat(a, b)
            vec = to_corner(element_of(pq, {prod: f.one}))
            row.append(tuple((k, x) for k, x in enumerate(vec) if x))
        table.append(row)
    unit = to_corner(element_of(pq, {(v, ()): f.one}))
    gens = []
    for k in q.out_arrows[v]:
        t = q.arrows[k].target
        if t == v:
            gens.append(to_corner(element_of(pq, {(v, (k,)): f.one})))
        else:
            for k2 in q.out_arrows[t]:
                if q.arrows[k2].target == v:
                    gens.append(to_corner(element_of(pq, {(v, (k, k2)): f.one})))
    Bp = FiniteAlgebra(f, [q.path_label(p) for p in corner], table, unit, gens)
    Lp = []
    for i in range(1, q.n + 1):
        seq = _return_path(q, v, i, poset)
        x = to_corner(element_of(pq, {q.path_from_vertices(seq): f.one}))
        Lp.append(ideal_from_generator(Bp, x) if any(x) else None)
    return Bp, Lp
