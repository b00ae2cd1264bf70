"""The endomorphism algebra A = End_B(L)^op, its radical and its quiver.

Conventions.  A map L(j) -> L(k) is a matrix X with X[r][c] the r-th
coordinate (in the echelon basis of L(k)) of the image of the c-th basis
vector of L(j).  The product a*b means "apply a, then b", so a block
element f: L(j) -> L(k) satisfies e_j * f * e_k = f; we call (j, k) its
block.  P(j) = A * e_j collects the maps into L(j).
"""
from __future__ import annotations

from dataclasses import dataclass

from .blocks import BlockAlgebra
from .ideals import cover_multiplier, hom_space, module_radical
from .linalg import Subspace, _kernel_vectors
from .paths import Arrow, Quiver
from .poset import Poset


class EndoError(RuntimeError):
    pass


def _matmul(f, Y, X):
    inner = len(X)
    return [[f.reduce(f(0) + sum(Y[r][t] * X[t][c] for t in range(inner) if Y[r][t]))
             for c in range(len(X[0]) if X else 0)] for r in range(len(Y))]


def _flatten(X):
    return [x for row in X for x in row]


class EndoAlgebra(BlockAlgebra):
    """A with block (j, k) = Hom_B(L(j), L(k))."""

    def __init__(self, B, L, poset: Poset | None = None, validated=False):
        self.B = B
        self.L = list(L)
        self.poset = poset
        self.validated = validated
        n = len(self.L)
        f = B.field
        self.homs = {}
        self.hom_spaces = {}
        dims = {}
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                H = hom_space(self.L[j - 1], self.L[k - 1])
                self.homs[(j, k)] = H
                size = self.L[k - 1].dim * self.L[j - 1].dim
                self.hom_spaces[(j, k)] = Subspace(f, size, [_flatten(X) for X in H.basis],
                                                   _pivots(H.basis))
                dims[(j, k)] = H.dim
        T = {}
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                Xs = self.homs[(a, b)].basis
                for c in range(1, n + 1):
                    Ys = self.homs[(b, c)].basis
                    target = (a, c)
                    T[(a, b, c)] = [[self.coords(target, _matmul(f, Y, X)) for Y in Ys] for X in Xs]
        ident = {}
        for v in range(1, n + 1):
            d = self.L[v - 1].dim
            ident[v] = self.coords((v, v), [[f.one if r == c else f.zero for c in range(d)]
                                            for r in range(d)])
        super().__init__(f, n, dims, T, ident)
        self.radical = self._radical()
        if poset is not None and all(M.generator is not None for M in self.L):
            self._canonical_maps()

    def coords(self, block, X):
        sub = self.hom_spaces[block]
        v = _flatten(X)
        if not sub.contains(v):
            raise EndoError(f"composite is not in the Hom block {block}")
        return [v[p] for p in sub.pivots]

    def matrix(self, block, vec):
        """The map of a block element, as a matrix."""
        j, k = block
        f = self.field
        X = self.hom_spaces[block].element(vec) if vec else []
        dm, dn = self.L[j - 1].dim, self.L[k - 1].dim
        if not X:
            return [[f.zero] * dm for _ in range(dn)]
        return [X[r * dm:(r + 1) * dm] for r in range(dn)]

    def apply(self, block, vec, b_vector):
        """Image in B of an element of L(j) under the block element."""
        j, k = block
        X = self.matrix(block, vec)
        c = self.L[j - 1].coords(b_vector)
        f = self.field
        out = [f.reduce(f(0) + sum(x * y for x, y in zip(row, c) if x)) for row in X]
        return self.L[k - 1].space.element(out)

    def _radical(self):
        f = self.field
        rad = {}
        for (j, k), d in self.dims.items():
            if j != k:
                rad[(j, k)] = Subspace.full(f, d)
                continue
            M = self.L[j - 1]
            radc = [M.coords(v) for v in module_radical(M).basis]
            # functionals on L(j)-coordinates vanishing on rad L(j)
            phis = _kernel_vectors(f, radc, M.dim) if radc else [f.unit_vector(M.dim, i)
                                                                for i in range(M.dim)]
            basis = self.homs[(j, k)].basis
            rows = []
            for phi in phis:
                for c in range(M.dim):
                    rows.append([f.reduce(f(0) + sum(phi[r] * X[r][c] for r in range(M.dim)))
                                 for X in basis])
            kern = _kernel_vectors(f, rows, d) if rows else [f.unit_vector(d, i) for i in range(d)]
            rad[(j, k)] = Subspace.span(f, d, kern)
        return rad

    # canonical cover maps

    def inclusion(self, i, j):
        """L(i) ⊆ L(j) as an element of block (i, j)."""
        Li, Lj = self.L[i - 1], self.L[j - 1]
        if not Lj.space.contains_subspace(Li.space):
            raise EndoError(f"L({i}) is not contained in L({j})")
        cols = [Lj.coords(v) for v in Li.space.basis]
        X = [[cols[c][r] for c in range(Li.dim)] for r in range(Lj.dim)]
        return self.coords((i, j), X)

    def right_multiplication(self, j, k, b):
        """The map L(j) -> L(k), v -> v*b, as an element of block (j, k)."""
        Lj, Lk = self.L[j - 1], self.L[k - 1]
        cols = [Lk.coords(self.B.multiply(v, b)) for v in Lj.space.basis]
        X = [[cols[c][r] for c in range(Lj.dim)] for r in range(Lk.dim)]
        return self.coords((j, k), X)

    def surjection(self, j, i):
        """The map L(j) ->> L(i) sending x_j to x_i (j below i), via cover multipliers."""
        chain = self.poset.chain(j, i)
        b = list(self.B.unit)
        for lo, hi in zip(chain, chain[1:]):
            m = cover_multiplier(self.B, self.L[lo - 1].generator, self.L[hi - 1].generator)
            if m is None:
                raise EndoError(f"no multiplier taking x_{lo} to x_{hi}")
            b = self.B.multiply(b, m)
        return self.right_multiplication(j, i, b)

    def _canonical_maps(self):
        p = self.poset
        for i in p.elements:
            for j in p.elements:
                if p.lt(j, i):
                    try:
                        self.embed[(i, j)] = self.inclusion(i, j)
                        self.coembed[(j, i)] = self.surjection(j, i)
                    except EndoError:
                        pass

    def global_algebra(self):
        return self.to_global(check=True)


def _pivots(mats):
    out = []
    for X in mats:
        v = _flatten(X)
        out.append(next(k for k, x in enumerate(v) if x))
    return out


def build_endo(B, L, poset=None, validated=False) -> EndoAlgebra:
    A = EndoAlgebra(B, L, poset, validated)
    A.global_algebra()  # associativity and unit are checked here
    for v in A.vertices:
        e = A.identities[v]
        if A.mul((v, v), e, (v, v), e) != e:
            raise EndoError(f"e_{v} is not idempotent")
    return A


def endo_radical(A: BlockAlgebra):
    return A.radical_chain()


def canonical_hom_basis(A: EndoAlgebra, j, k):
    """The composites f_(k,i,j) = (L(i) ⊆ L(k)) after (L(j) ->> L(i)) for i above j and k,
    as a list of (i, block element) pairs; checked to be a basis of the block (j, k)."""
    p = A.poset
    out = []
    for i in sorted(p.up(j) & p.up(k)):
        s = A.identities[j] if i == j else A.coembed[(j, i)]
        t = A.identities[k] if i == k else A.embed[(i, k)]
        out.append((i, A.mul((j, i), s, (i, k), t)))
    span = Subspace.span(A.field, A.dims[(j, k)], [v for _, v in out])
    if span.dim != len(out) or span.dim != A.dims[(j, k)]:
        raise EndoError(f"canonical maps do not form a basis of Hom(L({j}), L({k}))")
    return out


@dataclass
class QuiverReport:
    quiver: Quiver
    counts: dict
    consistent: bool
    problems: list


def extract_quiver(A: BlockAlgebra, rad2=None, strict=None) -> Quiver:
    """Arrows l -> t counted by dim(rad/rad^2) of the block (l, t)."""
    if rad2 is None:
        rad2 = A.product(A.radical, A.radical)
    poset = getattr(A, "poset", None)
    canonical = poset is not None and bool(A.embed)
    expect = set()
    if poset is not None:
        for lo, hi in poset.hasse():
            expect.update({(lo, hi), (hi, lo)})
    arrows = []
    problems = []
    for l in A.vertices:
        for t in A.vertices:
            r, r2 = A.radical[(l, t)], rad2[(l, t)]
            count = r.quotient_dim(r2)
            if poset is not None:
                want = 1 if (l, t) in expect else 0
                if count != want:
                    problems.append({"block": [l, t], "arrows": count, "expected": want})
            reps = []
            if canonical and count == 1 and (l, t) in expect:
                # for a cover l < t the arrow l -> t is L(l) ->> L(t), and t -> l is the inclusion
                rep = A.coembed.get((l, t)) if poset.lt(l, t) else A.embed.get((l, t))
                if rep is not None and not r2.contains(rep):
                    reps = [rep]
            if len(reps) != count:
                reps = r2.complement_in(r.basis)
            for rep in reps:
                arrows.append(Arrow(l, t, f"{l}->{t}", ((l, t), list(rep))))
    if problems and (strict if strict is not None else getattr(A, "validated", False)):
        raise EndoError(f"quiver does not double the Hasse diagram: {problems}")
    Q = Quiver(A.n, arrows)
    Q.problems = problems
    return Q
