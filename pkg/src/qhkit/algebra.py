"""Algebras from free presentations, radicals, socles and opposites."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra_core import AlgebraError, FiniteAlgebra
from .linalg import Subspace, _kernel_vectors
from .paths import Arrow, CapExceeded, Quiver, quotient, quotient_algebra


class PresentationError(ValueError):
    pass


class NotNilpotent(AlgebraError):
    pass


@dataclass
class FreePresentation:
    field: object
    generators: list
    relations: list  # each a list of (coeff, word) with word a tuple of generator indices
    commutative_sugar: bool = False
    nilpotency_cap: int = 32

    def all_relations(self):
        rels = [list(r) for r in self.relations]
        if self.commutative_sugar:
            one = self.field.one
            minus = self.field.reduce(-one)
            r = len(self.generators)
            for i in range(r):
                for j in range(i + 1, r):
                    rels.append([(one, (i, j)), (minus, (j, i))])
        return rels

    def validate(self):
        if not self.generators:
            return
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        for rel in self.relations:
            for c, w in rel:
                if any(not 0 <= g < len(self.generators) for g in w):
                    raise PresentationError(f"relation word {w} uses an unknown generator")
                if c and len(w) < 2:
                    raise PresentationError(
                        "relations must lie in the square of the augmentation ideal "
                        "(every word of length >= 2)")


def word_label(names, word):
    if not word:
        return "1"
    out = []
    k = 0
    while k < len(word):
        g = word[k]
        e = 1
        while k + e < len(word) and word[k + e] == g:
            e += 1
        out.append(names[g] if e == 1 else f"{names[g]}^{e}")
        k += e
    return "*".join(out)


def from_free_presentation(p: FreePresentation) -> FiniteAlgebra:
    p.validate()
    f = p.field
    names = list(p.generators)
    quiver = Quiver(1, [Arrow(1, 1, name) for name in names])
    rels = []
    for rel in p.all_relations():
        d = {}
        for c, w in rel:
            key = (1, tuple(w))
            d[key] = f.reduce(d.get(key, 0) + f(c))
        rels.append(d)
    try:
        pq = quotient(quiver, f, rels, start_degree=1, cap=p.nilpotency_cap)
    except CapExceeded as exc:
        raise PresentationError(
            f"no stabilization within nilpotency cap {p.nilpotency_cap}; "
            "the quotient may be infinite-dimensional") from exc
    labels = [word_label(names, path[1]) for path in pq.basis]
    alg = quotient_algebra(pq, labels)
    pos = {path: k for k, path in enumerate(pq.basis)}
    gens = []
    for g in range(len(names)):
        nf = pq.ideal.reduce({pq.index[(1, (g,))]: f.one})
        v = f.zeros(alg.dim)
        for k, c in nf.items():
            v[pos[pq.columns[k]]] = c
        gens.append(v)
    alg.generators = gens
    alg.generator_names = names
    alg.words = [path[1] for path in pq.basis]
    return alg


def multiply(B: FiniteAlgebra, a, b):
    return B.multiply(a, b)


def evaluate_word(B: FiniteAlgebra, word, generators=None):
    gens = generators if generators is not None else B.generators
    out = list(B.unit)
    for g in word:
        out = B.multiply(out, gens[g])
    return out


def _span(B, vectors):
    return Subspace.span(B.field, B.dim, vectors)


def radical_chain(B: FiniteAlgebra, generator_images=None):
    """[rad, rad^2, ..., 0] for the ideal generated by the given elements,
    together with the nilpotency index (first N with rad^N = 0)."""
    gens = generator_images if generator_images is not None else (B.generators or [])
    gens = [g for g in gens if any(g)]
    rad = _span(B, gens)
    while True:
        grown = rad.sum(_span(B, [B.multiply(v, g) for v in rad.basis for g in gens]))
        if grown == rad:
            break
        rad = grown
    chain = [rad]
    while chain[-1].dim:
        nxt = _span(B, [B.multiply(v, g) for v in chain[-1].basis for g in gens])
        if nxt == chain[-1]:
            raise NotNilpotent(f"radical powers stall at dimension {nxt.dim}")
        chain.append(nxt)
    return chain, len(chain)


def radical(B: FiniteAlgebra, generator_images=None) -> Subspace:
    return radical_chain(B, generator_images)[0][0]


def _annihilator(B, rad_basis, side):
    # solve r*b = 0 (left) or b*r = 0 (right) for all r in the radical basis
    rows = []
    for r in rad_basis:
        imgs = B.left_images(r) if side == "left" else B.right_images(r)
        rows.extend([[imgs[j][k] for j in range(B.dim)] for k in range(B.dim)])
    return Subspace.span(B.field, B.dim, _kernel_vectors(B.field, rows, B.dim)) if rows \
        else Subspace.full(B.field, B.dim)


def socle(B: FiniteAlgebra, side="left", rad=None) -> Subspace:
    """Left socle {b : rad*b = 0} or right socle {b : b*rad = 0}."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if rad is None:
        rad = radical(B)
    return _annihilator(B, rad.basis, side)


@dataclass
class LocalSIReport:
    is_local: bool
    is_self_injective: bool
    socle: Subspace
    top_dim: int
    nilpotency_index: int
    right_socle_dim: int = 0

    def to_dict(self):
        return {"is_local": self.is_local, "is_self_injective": self.is_self_injective,
                "socle_dim": self.socle.dim, "right_socle_dim": self.right_socle_dim,
                "top_dim": self.top_dim, "nilpotency_index": self.nilpotency_index}


def classify_local_selfinjective(B: FiniteAlgebra, generator_images=None) -> LocalSIReport:
    try:
        chain, index = radical_chain(B, generator_images)
    except NotNilpotent:
        return LocalSIReport(False, False, Subspace.zero(B.field, B.dim), B.dim, 0)
    rad = chain[0]
    top = B.dim - rad.dim
    soc = socle(B, "left", rad)
    rsoc = socle(B, "right", rad)
    local = top == 1
    return LocalSIReport(local, local and soc.dim == 1 and rsoc.dim == 1, soc, top, index, rsoc.dim)


def opposite(B: FiniteAlgebra) -> FiniteAlgebra:
    table = [[B.table[j][i] for j in range(B.dim)] for i in range(B.dim)]
    op = FiniteAlgebra(B.field, B.labels, table, B.unit, B.generators, B.generator_names, check=False)
    if hasattr(B, "words"):
        op.words = B.words
    return op


def is_commutative(B: FiniteAlgebra) -> bool:
    return all(B.table[i][j] == B.table[j][i] for i in range(B.dim) for j in range(i + 1, B.dim))
