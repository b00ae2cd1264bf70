"""Quivers, paths, linear combinations of paths and path-algebra quotients.

A path is a pair (start, arrows) where `arrows` is a tuple of arrow
indices read in traversal order.  The product of two paths is their
concatenation when the first ends where the second starts, else zero.
A free algebra on r generators is the path algebra of the quiver with one
vertex and r loops, so the same quotient routine serves both.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .algebra_core import FiniteAlgebra
from .sparse import SparseEchelon


class QuiverError(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


@dataclass
class Arrow:
    source: int
    target: int
    name: str = ""
    element: object = None  # representative in an algebra, when known


class Quiver:
    def __init__(self, n: int, arrows):
        self.n = n
        self.arrows = [a if isinstance(a, Arrow) else Arrow(*a) for a in arrows]
        for k, a in enumerate(self.arrows):
            if not (1 <= a.source <= n and 1 <= a.target <= n):
                raise QuiverError(f"arrow {a.source}->{a.target} outside 1..{n}")
            if not a.name:
                a.name = f"{a.source}->{a.target}"
        self.out_arrows = {v: [] for v in range(1, n + 1)}
        self.in_arrows = {v: [] for v in range(1, n + 1)}
        for k, a in enumerate(self.arrows):
            self.out_arrows[a.source].append(k)
            self.in_arrows[a.target].append(k)
        pairs = [(a.source, a.target) for a in self.arrows]
        self.is_simple = len(pairs) == len(set(pairs))

    def __repr__(self):
        return f"Quiver(n={self.n}, arrows={[(a.source, a.target) for a in self.arrows]})"

    def arrow_pairs(self):
        return [(a.source, a.target) for a in self.arrows]

    def arrow_between(self, s, t) -> int:
        found = [k for k, a in enumerate(self.arrows) if a.source == s and a.target == t]
        if len(found) != 1:
            raise QuiverError(f"{len(found)} arrows from {s} to {t}")
        return found[0]

    def reverse_arrow(self, k) -> int:
        a = self.arrows[k]
        if a.source == a.target:
            return k
        try:
            return self.arrow_between(a.target, a.source)
        except QuiverError:
            raise QuiverError(f"arrow {a.source}->{a.target} has no reverse") from None

    # paths

    def end(self, path):
        start, arrows = path
        return self.arrows[arrows[-1]].target if arrows else start

    def concat(self, p, q):
        if self.end(p) != q[0]:
            return None
        return (p[0], p[1] + q[1])

    def paths_of_length(self, d, start=None):
        starts = [start] if start is not None else range(1, self.n + 1)
        layer = [(v, ()) for v in starts]
        for _ in range(d):
            layer = [(s, arr + (k,)) for s, arr in layer for k in self.out_arrows[self.end((s, arr))]]
        return layer

    def paths_up_to(self, d):
        out = []
        layer = [(v, ()) for v in range(1, self.n + 1)]
        out.extend(layer)
        for _ in range(d):
            layer = [(s, arr + (k,)) for s, arr in layer for k in self.out_arrows[self.end((s, arr))]]
            out.extend(layer)
        return out

    def vertex_sequence(self, path):
        start, arrows = path
        return (start,) + tuple(self.arrows[k].target for k in arrows)

    def path_from_vertices(self, seq):
        seq = [int(v) for v in seq]
        if not seq or any(not 1 <= v <= self.n for v in seq):
            raise QuiverError(f"path {seq} has a vertex outside 1..{self.n}")
        return (seq[0], tuple(self.arrow_between(a, b) for a, b in zip(seq, seq[1:])))

    def path_label(self, path):
        if self.is_simple:
            return ",".join(str(v) for v in self.vertex_sequence(path))
        start, arrows = path
        if not arrows:
            return f"e{start}"
        return "*".join(self.arrows[k].name for k in arrows)

    def reverse_path(self, path):
        start, arrows = path
        return (self.end(path), tuple(self.reverse_arrow(k) for k in reversed(arrows)))


def path_key(path):
    """Ascending sort key: length, then lex on (start, arrows)."""
    return (len(path[1]), path[0], path[1])


def _column_key(path):
    # column order for the quotient: short paths first, lex-descending within a length
    return (len(path[1]), -path[0], tuple(-a for a in path[1]))


@dataclass
class PathCombination:
    quiver: Quiver
    terms: tuple  # ((coeff, path), ...)
    field: object = None

    def __post_init__(self):
        f = self.field
        acc = {}
        for c, p in self.terms:
            acc[p] = acc.get(p, 0) + c
        terms = []
        for p in sorted(acc, key=path_key):
            c = f.reduce(f(0) + acc[p]) if f is not None else acc[p]
            if c:
                terms.append((c, p))
        ends = {(p[0], self.quiver.end(p)) for _, p in terms}
        if len(ends) > 1:
            raise QuiverError("paths in a combination must share start and end vertices")
        self.terms = tuple(terms)

    @property
    def endpoints(self):
        if not self.terms:
            return None
        p = self.terms[0][1]
        return p[0], self.quiver.end(p)

    def is_zero(self):
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, (c, p) in enumerate(self.terms):
            label = self.quiver.path_label(p)
            cs = self.field.to_str(c) if self.field is not None else str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            body = label if cs == "1" else f"{cs}*{label}"
            if k == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([\d,\s]+?)\s*(?=[+-]|$)")


def parse_path_combination(quiver: Quiver, text: str, field) -> PathCombination:
    """Parse "6,4,2,1 - 6,5,3,1" or compact digit strings like "6421 - 6531".

    Compact strings split into single digits and need n <= 9.
    """
    text = text.strip()
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        a = parse_path_combination(quiver, lhs, field)
        b = parse_path_combination(quiver, rhs, field) if rhs.strip() != "0" else None
        terms = list(a.terms)
        if b is not None:
            terms += [(field.reduce(-c), p) for c, p in b.terms]
        return PathCombination(quiver, tuple(terms), field)
    pos = 0
    terms = []
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise QuiverError(f"cannot parse path combination at column {pos + 1}: {text!r}")
        sign, coeff, body = m.groups()
        body = body.strip()
        if not body:
            raise QuiverError(f"missing path at column {pos + 1}: {text!r}")
        if "," in body:
            seq = [int(t) for t in body.split(",")]
        else:
            if quiver.n > 9 and len(body) > 1:
                raise QuiverError("compact path notation needs at most 9 vertices")
            seq = [int(ch) for ch in body]
        c = field(coeff or 1)
        if sign == "-":
            c = field.reduce(-c)
        terms.append((c, quiver.path_from_vertices(seq)))
        pos = m.end()
    return PathCombination(quiver, tuple(terms), field)


@dataclass
class PathQuotient:
    """KQ / (ideal) truncated at `degree`, with its normal-form machinery."""
    quiver: Quiver
    field: object
    degree: int
    columns: list
    index: dict
    ideal: SparseEchelon
    basis: list = dc_field(default_factory=list)

    def normal_form(self, vec: dict) -> dict:
        return self.ideal.reduce(vec)

    def block_dims(self):
        dims = {}
        for p in self.basis:
            key = (p[0], self.quiver.end(p))
            dims[key] = dims.get(key, 0) + 1
        return dims


def saturate(quiver, field, relations, degree):
    """Span of all arrow-multiples of `relations`, dropping paths longer than `degree`.

    `relations` are dicts path -> coefficient.  Returns a PathQuotient.
    """
    columns = sorted(quiver.paths_up_to(degree), key=_column_key)
    index = {p: k for k, p in enumerate(columns)}
    ech = SparseEchelon(field)

    def to_vec(rel):
        v = {}
        for p, c in rel.items():
            if len(p[1]) <= degree and c:
                v[index[p]] = c
        return v

    queue = [to_vec(r) for r in relations]
    while queue:
        row = ech.insert(queue.pop())
        if row is None:
            continue
        paths = [(columns[k], c) for k, c in row.items()]
        start = paths[0][0][0]
        end = quiver.end(paths[0][0])
        for a in quiver.in_arrows[start]:
            arrow = (quiver.arrows[a].source, (a,))
            v = {}
            for p, c in paths:
                q = quiver.concat(arrow, p)
                if len(q[1]) <= degree:
                    v[index[q]] = c
            if v:
                queue.append(v)
        for a in quiver.out_arrows[end]:
            arrow = (end, (a,))
            v = {}
            for p, c in paths:
                q = quiver.concat(p, arrow)
                if len(q[1]) <= degree:
                    v[index[q]] = c
            if v:
                queue.append(v)
    pq = PathQuotient(quiver, field, degree, columns, index, ech)
    piv = ech.pivots
    pq.basis = sorted((columns[k] for k in range(len(columns)) if k not in piv), key=path_key)
    return pq


def top_degree_in_ideal(pq: PathQuotient) -> bool:
    one = pq.field.one
    return all(not pq.ideal.reduce({pq.index[p]: one}) for p in pq.quiver.paths_of_length(pq.degree))


def quotient(quiver, field, relations, start_degree=1, cap=32) -> PathQuotient:
    """Find the first degree D >= start_degree at which every path of length D
    lies in the truncated ideal, and return the quotient at that degree."""
    for d in range(max(start_degree, 1), cap + 1):
        pq = saturate(quiver, field, relations, d)
        if top_degree_in_ideal(pq):
            return pq
    raise CapExceeded(f"quotient not finite-dimensional within degree cap {cap}")


def quotient_algebra(pq: PathQuotient, labels=None) -> FiniteAlgebra:
    """Structure constants of the truncated quotient on its path basis."""
    q, f = pq.quiver, pq.field
    pos = {p: k for k, p in enumerate(pq.basis)}
    cols = pq.columns
    m = len(pq.basis)
    table = []
    for p in pq.basis:
        row = []
        for r in pq.basis:
            prod = q.concat(p, r)
            if prod is None or len(prod[1]) > pq.degree:
                row.append(())
                continue
            nf = pq.ideal.reduce({pq.index[prod]: f.one})
            row.append(tuple(sorted((pos[cols[k]], c) for k, c in nf.items())))
        table.append(row)
    unit = f.zeros(m)
    for v in range(1, q.n + 1):
        if (v, ()) in pos:
            unit[pos[(v, ())]] = f.one
    if labels is None:
        labels = [q.path_label(p) for p in pq.basis]
    return FiniteAlgebra(f, labels, table, unit)


def element_of(pq: PathQuotient, combo: dict):
    """Coordinates (on pq.basis) of a combination of paths."""
    f = pq.field
    pos = {p: k for k, p in enumerate(pq.basis)}
    v = {}
    for p, c in combo.items():
        if len(p[1]) <= pq.degree and c:
            k = pq.index[p]
            v[k] = f.reduce(v.get(k, 0) + c)
    nf = pq.ideal.reduce(v)
    out = f.zeros(len(pq.basis))
    for k, c in nf.items():
        out[pos[pq.columns[k]]] = c
    return out
