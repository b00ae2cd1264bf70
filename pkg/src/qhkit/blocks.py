"""Basic algebras stored by Peirce blocks.

For an algebra with a complete set of orthogonal idempotents e_1..e_n every
element splits into components in the blocks (a, b) = e_a * A * e_b.  A
`BlockAlgebra` keeps a basis of each block and the products

    T[(a, b, c)][i][j] = (basis i of block (a,b)) * (basis j of block (b,c))

as coordinate vectors in block (a, c).  Subspaces that respect the block
decomposition are dicts block -> Subspace of block coordinates.
"""
from __future__ import annotations

from .algebra_core import FiniteAlgebra
from .linalg import Subspace


class BlockAlgebra:
    def __init__(self, field, n, dims, tensors, identities, radical=None,
                 embed=None, coembed=None):
        self.field = field
        self.n = n
        self.dims = dict(dims)
        self.T = tensors
        self.identities = identities
        self.radical = radical
        self.embed = embed or {}      # (i, j): element of block (i, j) with P(i) ↪ P(j), i >= j
        self.coembed = coembed or {}  # (j, i): element of block (j, i), same role on the opposite side
        self._global = None

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def blocks(self):
        return [(a, b) for a in self.vertices for b in self.vertices]

    @property
    def dim(self):
        return sum(self.dims.values())

    def mul(self, ab, u, bc, v):
        """Product of homogeneous elements; None when the blocks do not chain."""
        a, b = ab
        b2, c = bc
        if b != b2:
            return None
        f = self.field
        d = self.dims[(a, c)]
        out = [0] * d
        T = self.T[(a, b, c)]
        for i, x in enumerate(u):
            if not x:
                continue
            row = T[i]
            for j, y in enumerate(v):
                if y:
                    xy = x * y
                    for k, z in enumerate(row[j]):
                        if z:
                            out[k] += xy * z
        return [f.reduce(f(0) + x) for x in out]

    def block_basis(self, ab):
        f = self.field
        return [f.unit_vector(self.dims[ab], i) for i in range(self.dims[ab])]

    # graded subspaces

    def zero_space(self, ab):
        return Subspace.zero(self.field, self.dims[ab])

    def span(self, ab, vectors):
        return Subspace.span(self.field, self.dims[ab], vectors)

    def product(self, U: dict, V: dict) -> dict:
        """Graded span of all products u*v."""
        acc = {}
        for (a, b), su in U.items():
            for (b2, c), sv in V.items():
                if b != b2 or not su.dim or not sv.dim:
                    continue
                vecs = acc.setdefault((a, c), [])
                for u in su.basis:
                    for v in sv.basis:
                        w = self.mul((a, b), u, (b, c), v)
                        if any(w):
                            vecs.append(w)
        return {ab: self.span(ab, acc.get(ab, [])) for ab in self.blocks()}

    def full(self, blocks=None) -> dict:
        blocks = blocks if blocks is not None else self.blocks()
        return {ab: Subspace.full(self.field, self.dims[ab]) for ab in blocks}

    def radical_chain(self):
        """[rad, rad^2, ..., 0] as graded subspaces."""
        chain = [self.radical]
        while any(s.dim for s in chain[-1].values()):
            nxt = self.product(chain[-1], self.radical)
            if all(nxt[ab] == chain[-1][ab] for ab in self.blocks()):
                raise ArithmeticError("radical powers do not reach zero")
            chain.append(nxt)
        return chain

    # opposite and global views

    def opposite(self) -> "BlockAlgebra":
        dims = {(a, b): self.dims[(b, a)] for (a, b) in self.dims}
        T = {}
        for (a, b, c), t in self.T.items():
            # (a,b)x(b,c) in the opposite is (b,a)... read backwards: t'(c,b,a)[j][i] = t(a,b,c)[i][j]
            T[(c, b, a)] = [[t[i][j] for i in range(len(t))] for j in range(len(t[0]) if t else 0)] \
                if t and t[0] else [[] for _ in range(self.dims[(b, c)])]
        rad = {(a, b): s for (b, a), s in self.radical.items()} if self.radical else None
        op = BlockAlgebra(self.field, self.n, dims, T, self.identities, rad,
                          embed={(i, j): v for (j, i), v in self.coembed.items()},
                          coembed={(j, i): v for (i, j), v in self.embed.items()})
        return op

    def offsets(self):
        off = {}
        k = 0
        for ab in self.blocks():
            off[ab] = k
            k += self.dims[ab]
        return off

    def to_global(self, check=True) -> FiniteAlgebra:
        if self._global is not None:
            return self._global
        off = self.offsets()
        labels = []
        owner = []
        for ab in self.blocks():
            for i in range(self.dims[ab]):
                labels.append(f"{ab[0]}->{ab[1]}#{i}")
                owner.append((ab, i))
        m = len(labels)
        table = [[() for _ in range(m)] for _ in range(m)]
        for (a, b, c), t in self.T.items():
            oc = off[(a, c)]
            for i, row in enumerate(t):
                gi = off[(a, b)] + i
                for j, vec in enumerate(row):
                    gj = off[(b, c)] + j
                    table[gi][gj] = tuple((oc + k, x) for k, x in enumerate(vec) if x)
        unit = self.field.zeros(m)
        for v in self.vertices:
            for k, x in enumerate(self.identities[v]):
                unit[off[(v, v)] + k] = x
        alg = FiniteAlgebra(self.field, labels, table, unit, check=check)
        alg.block_index = [ab for ab, _ in owner]
        self._global = alg
        return alg

    def to_global_vector(self, ab, vec):
        off = self.offsets()
        out = self.field.zeros(self.dim)
        for k, x in enumerate(vec):
            out[off[ab] + k] = x
        return out

    def idempotent(self, v):
        return self.to_global_vector((v, v), self.identities[v])
