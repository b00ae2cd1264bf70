"""Left modules inside a block algebra and the 1-quasi-hereditary axioms.

All modules here are left submodules of A, stored as dicts block -> Subspace
of block coordinates.  Such submodules automatically split along the left
idempotents, so e_k * M is the part of M in the blocks (k, *).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .linalg import Subspace, _kernel_vectors


@dataclass
class AModule:
    space: dict  # block -> Subspace
    tag: str = ""

    @property
    def dim(self):
        return sum(s.dim for s in self.space.values())

    def block(self, ab):
        return self.space.get(ab)

    def __eq__(self, other):
        if not isinstance(other, AModule):
            return NotImplemented
        for k in set(self.space) | set(other.space):
            a, b = self.space.get(k), other.space.get(k)
            if _d(a) != _d(b) or (_d(a) and a != b):
                return False
        return True


def _d(s):
    return 0 if s is None else s.dim


def _vecs(s):
    return [] if s is None else [list(v) for v in s.basis]


def module_sum(A, mods, tag="") -> AModule:
    acc = {}
    for M in mods:
        for ab, s in M.space.items():
            acc.setdefault(ab, []).extend(s.basis)
    return AModule({ab: A.span(ab, v) for ab, v in acc.items()}, tag)


def contains(M: AModule, N: AModule) -> bool:
    """N ⊆ M."""
    for ab, s in N.space.items():
        if s.dim and (M.space.get(ab) is None or not M.space[ab].contains_subspace(s)):
            return False
    return True


def same(M: AModule, N: AModule) -> bool:
    return contains(M, N) and contains(N, M)


def weight_dims(A, M: AModule) -> list:
    out = [0] * A.n
    for (a, _), s in M.space.items():
        out[a - 1] += s.dim
    return out


def generated(A, gens: dict, tag="") -> AModule:
    """Left submodule A*gens, gens given as block -> vector list."""
    acc = {}
    for (k, b), vecs in gens.items():
        for v in vecs:
            if not any(v):
                continue
            for m in A.vertices:
                for i in range(A.dims[(m, k)]):
                    e = A.field.unit_vector(A.dims[(m, k)], i)
                    w = A.mul((m, k), e, (k, b), v)
                    if any(w):
                        acc.setdefault((m, b), []).append(w)
    return AModule({ab: A.span(ab, v) for ab, v in acc.items()}, tag)


def is_submodule(A, M: AModule) -> bool:
    gen = generated(A, {ab: _vecs(s) for ab, s in M.space.items()})
    return contains(M, gen)


def projective(A, i) -> AModule:
    if not 1 <= i <= A.n:
        raise IndexError(f"no vertex {i}")
    return AModule({(k, i): Subspace.full(A.field, A.dims[(k, i)]) for k in A.vertices}, f"P({i})")


def right_image(A, M: AModule, gblock, g, tag="") -> AModule:
    """{m * g : m in M} for a homogeneous g in block gblock."""
    acc = {}
    for (a, b), s in M.space.items():
        if b != gblock[0]:
            continue
        for v in s.basis:
            w = A.mul((a, b), v, gblock, g)
            acc.setdefault((a, gblock[1]), []).append(w)
    return AModule({ab: A.span(ab, v) for ab, v in acc.items()}, tag)


def right_kernel(A, M: AModule, gblock, g) -> AModule:
    """{m in M : m * g = 0}."""
    f = A.field
    out = {}
    for (a, b), s in M.space.items():
        if b != gblock[0] or not s.dim:
            out[(a, b)] = s
            continue
        imgs = [A.mul((a, b), v, gblock, g) for v in s.basis]
        d = A.dims[(a, gblock[1])]
        rows = [[imgs[t][r] for t in range(s.dim)] for r in range(d)]
        coeffs = _kernel_vectors(f, rows, s.dim) if d else \
            [f.unit_vector(s.dim, t) for t in range(s.dim)]
        out[(a, b)] = A.span((a, b), [s.element(c) for c in coeffs])
    return AModule(out, "kernel")


def module_socle(A, M: AModule, N: AModule | None = None) -> AModule:
    """{m in M : rad(A) * m ⊆ N} (N = 0 by default)."""
    f = A.field
    out = {}
    for (b, j), s in M.space.items():
        if not s.dim:
            out[(b, j)] = s
            continue
        rows = []
        for a in A.vertices:
            r = A.radical[(a, b)]
            if not r.dim:
                continue
            target = N.space.get((a, j)) if N is not None else None
            for rv in r.basis:
                imgs = [A.mul((a, b), rv, (b, j), m) for m in s.basis]
                if target is not None:
                    imgs = [target.reduce(w) for w in imgs]
                rows.extend([[imgs[t][k] for t in range(s.dim)] for k in range(A.dims[(a, j)])])
        coeffs = _kernel_vectors(f, rows, s.dim) if rows else \
            [f.unit_vector(s.dim, t) for t in range(s.dim)]
        out[(b, j)] = A.span((b, j), [s.element(c) for c in coeffs])
    return AModule(out, "socle")


@dataclass
class StandardModule:
    index: int
    P: AModule
    N: AModule
    weights: list
    trace_matches_images: bool | None = None

    @property
    def dim(self):
        return self.P.dim - self.N.dim


def trace_submodule(A, poset, j) -> AModule:
    """N(j) = sum over k not <= j of A * e_k * A * e_j."""
    gens = {}
    for k in A.vertices:
        if not poset.leq(k, j):
            gens[(k, j)] = [A.field.unit_vector(A.dims[(k, j)], t) for t in range(A.dims[(k, j)])]
    N = generated(A, gens, f"N({j})")
    for k in A.vertices:
        N.space.setdefault((k, j), A.zero_space((k, j)))
    return N


def embedded_projective(A, i, j) -> AModule | None:
    if i == j:
        return projective(A, j)
    g = A.embed.get((i, j))
    if g is None:
        return None
    return right_image(A, projective(A, i), (i, j), g, f"P({i})->P({j})")


def standard_module(A, poset, j) -> StandardModule:
    P = projective(A, j)
    N = trace_submodule(A, poset, j)
    wp, wn = weight_dims(A, P), weight_dims(A, N)
    sm = StandardModule(j, P, N, [a - b for a, b in zip(wp, wn)])
    images = [embedded_projective(A, i, j) for i in poset.up(j) if i != j]
    if all(M is not None for M in images):
        S = module_sum(A, images)
        sm.trace_matches_images = same(S, N)
    return sm


@dataclass
class FiltrationLayer:
    vertex: int
    weights: list
    expected: list
    top_at_vertex: bool

    @property
    def ok(self):
        return self.weights == self.expected and self.top_at_vertex

    def to_dict(self):
        return {"vertex": self.vertex, "weights": self.weights, "expected": self.expected,
                "top_at_vertex": self.top_at_vertex}


@dataclass
class Filtration:
    projective: int
    order: list
    layers: list
    exhausts: bool

    @property
    def ok(self):
        return self.exhausts and all(l.ok for l in self.layers)

    def multiplicities(self, n):
        return [1 if i in self.order else 0 for i in range(1, n + 1)]


def _product_with_radical(A, M: AModule) -> AModule:
    acc = {}
    for (b, j), s in M.space.items():
        for a in A.vertices:
            for rv in A.radical[(a, b)].basis:
                for v in s.basis:
                    w = A.mul((a, b), rv, (b, j), v)
                    if any(w):
                        acc.setdefault((a, j), []).append(w)
    return AModule({ab: A.span(ab, v) for ab, v in acc.items()})


def delta_filtration(A, poset, j, standards=None) -> Filtration:
    order = poset.linear_extension(poset.up(j))
    imgs = [embedded_projective(A, i, j) for i in order]
    if any(M is None for M in imgs):
        return Filtration(j, order, [], False)
    D = [module_sum(A, imgs[t:]) for t in range(len(order))] + [AModule({})]
    layers = []
    for t, i in enumerate(order):
        w = [a - b for a, b in zip(weight_dims(A, D[t]), weight_dims(A, D[t + 1]))]
        if standards is not None:
            exp = standards[i].weights
        else:
            exp = standard_module(A, poset, i).weights
        below = module_sum(A, [_product_with_radical(A, D[t]), D[t + 1]])
        top = [a - b for a, b in zip(weight_dims(A, D[t]), weight_dims(A, below))]
        layers.append(FiltrationLayer(i, w, exp, top == [1 if k == i else 0 for k in A.vertices]))
    return Filtration(j, order, layers, same(D[0], projective(A, j)))


@dataclass
class QHReport:
    passed: bool
    axioms: dict
    standard_dims: list
    standard_weights: dict
    filtrations: dict
    socles: dict
    embeddings: dict
    witnesses: list = dc_field(default_factory=list)

    def to_dict(self):
        return {"passed": self.passed, "axioms": self.axioms, "standard_dims": self.standard_dims,
                "standard_weights": {str(k): v for k, v in self.standard_weights.items()},
                "filtrations": self.filtrations, "socles": self.socles,
                "embeddings": self.embeddings, "witnesses": self.witnesses}


def _socle_side(A, side_name):
    res = {}
    wit = []
    want = [1] + [0] * (A.n - 1)
    for j in A.vertices:
        w = weight_dims(A, module_socle(A, projective(A, j)))
        res[str(j)] = w
        if w != want:
            wit.append({"axiom": 3, "side": side_name, "projective": j, "socle_weights": w})
    return res, wit


def _embedding_side(A, poset, side_name):
    n = poset.n
    res = {}
    wit = []
    for j in A.vertices:
        d = A.dims[(j, n)]
        if d != 1:
            res[str(j)] = False
            wit.append({"axiom": 4, "side": side_name, "vertex": j, "hom_dim_to_max": d})
            continue
        g = A.field.unit_vector(1, 0)
        K = right_kernel(A, projective(A, j), (j, n), g)
        ok = same(K, trace_submodule(A, poset, j))
        res[str(j)] = ok
        if not ok:
            wit.append({"axiom": 4, "side": side_name, "vertex": j,
                        "kernel_dim": K.dim, "trace_dim": trace_submodule(A, poset, j).dim})
    return res, wit


def check_1qh(A, poset) -> QHReport:
    n = poset.n
    witnesses = []
    ax1 = poset.labeling_ok()
    if not ax1:
        witnesses.append({"axiom": 1, "minima": poset.minima(), "maxima": poset.maxima()})

    standards = {j: standard_module(A, poset, j) for j in A.vertices}
    ax2 = True
    for j, sm in standards.items():
        want = [1 if poset.leq(k, j) else 0 for k in A.vertices]
        if sm.weights != want:
            ax2 = False
            witnesses.append({"axiom": 2, "standard": j, "weights": sm.weights, "expected": want})
        if sm.trace_matches_images is False:
            ax2 = False
            witnesses.append({"axiom": 2, "standard": j, "trace_differs_from_images": True})
    filts = {}
    for j in A.vertices:
        F = delta_filtration(A, poset, j, standards)
        filts[str(j)] = {"order": F.order, "layers": [l.to_dict() for l in F.layers],
                         "exhausts": F.exhausts, "ok": F.ok}
        if not F.ok:
            ax2 = False
            bad = [l.vertex for l in F.layers if not l.ok]
            witnesses.append({"axiom": 2, "filtration_of": j, "failing_layers": bad,
                              "exhausts": F.exhausts})

    Aop = A.opposite()
    soc, w3 = _socle_side(A, "P")
    soc_op, w3op = _socle_side(Aop, "opposite")
    witnesses += w3 + w3op
    ax3 = not w3 and not w3op

    emb, w4 = _embedding_side(A, poset, "delta")
    emb_op, w4op = _embedding_side(Aop, poset, "nabla")
    witnesses += w4 + w4op
    ax4 = not w4 and not w4op

    axioms = {"1": ax1, "2": ax2, "3": ax3, "4": ax4}
    return QHReport(all(axioms.values()), axioms, [standards[j].dim for j in A.vertices],
                    {j: standards[j].weights for j in A.vertices}, filts,
                    {"P": soc, "opposite": soc_op}, {"delta": emb, "nabla": emb_op}, witnesses)
