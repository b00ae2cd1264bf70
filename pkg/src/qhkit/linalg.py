"""Exact dense linear algebra: row reduction, kernels and subspaces.

Vectors are plain lists of field elements.  Subspaces are stored by their
reduced row echelon basis, so two subspaces are equal exactly when their
bases are equal entry by entry.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .field import FieldSpec


class DimensionError(ValueError):
    pass


def _rref_rows(field: FieldSpec, rows, ncols):
    if not rows or ncols == 0:
        return [], []
    if field.is_prime_field:
        return kernels.rref_modp(rows, ncols, field.p)
    return kernels.rref_exact(rows, ncols)


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    rows: int
    cols: int
    entries: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [field.vector(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(tuple(r) for r in rows))

    def row_list(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, v):
        f = self.field
        return [f.reduce(sum(a * b for a, b in zip(r, v) if a)) for r in self.entries]


def rref(m: Matrix):
    """Return (rref matrix, rank, pivot columns)."""
    rows, pivots = _rref_rows(m.field, m.row_list(), m.cols)
    zero = m.field.zeros(m.cols)
    padded = [tuple(r) for r in rows] + [tuple(zero)] * (m.rows - len(rows))
    return Matrix(m.field, m.rows, m.cols, tuple(padded)), len(pivots), list(pivots)


def _kernel_vectors(field, rows, ncols):
    red, pivots = _rref_rows(field, rows, ncols)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = field.zeros(ncols)
        v[free] = field.one
        for r, pc in zip(red, pivots):
            x = r[free]
            if x:
                v[pc] = field.reduce(-x)
        out.append(v)
    return out


def kernel_basis(m: Matrix) -> "Subspace":
    """The subspace {v : m v = 0} of the column space."""
    return Subspace.span(m.field, m.cols, _kernel_vectors(m.field, m.row_list(), m.cols))


def solve(field, columns, target, ncols=None):
    """Find c with sum_k c[k] * columns[k] = target, free variables set to 0.

    `columns` is a list of vectors of the same length as `target`.  Returns
    None when there is no solution.
    """
    n = len(columns)
    dim = len(target)
    rows = [[columns[k][r] for k in range(n)] + [target[r]] for r in range(dim)]
    red, pivots = _rref_rows(field, rows, n + 1)
    if pivots and pivots[-1] == n:
        return None
    c = field.zeros(n)
    for r, pc in zip(red, pivots):
        c[pc] = r[n]
    return c


def combine(field, coeffs, vectors, dim):
    out = [0] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return [field.reduce(field(0) + x) for x in out]


def is_zero(v) -> bool:
    return not any(v)


class Subspace:
    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, field, ambient_dim, vectors):
        rows = [list(v) for v in vectors if any(v)]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionError(f"vector of length {len(r)} in ambient dimension {ambient_dim}")
        red, pivots = _rref_rows(field, rows, ambient_dim)
        return cls(field, ambient_dim, red, pivots)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, [field.unit_vector(ambient_dim, i) for i in range(ambient_dim)],
                   range(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionError("subspaces live in different ambient spaces")

    def vectors(self):
        return [list(r) for r in self.basis]

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not other.basis:
            return self
        if not self.basis:
            return other
        return Subspace.span(self.field, self.ambient_dim, self.vectors() + other.vectors())

    __add__ = sum

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: reduce [u|u] over u in self stacked on [v|0] over v in other."""
        self._check(other)
        d = self.ambient_dim
        if not self.basis or not other.basis:
            return Subspace.zero(self.field, d)
        zero = self.field.zeros(d)
        rows = [list(u) + list(u) for u in self.basis] + [list(v) + zero for v in other.basis]
        red, pivots = _rref_rows(self.field, rows, 2 * d)
        inter = [r[d:] for r, pc in zip(red, pivots) if pc >= d]
        return Subspace.span(self.field, d, inter)

    __and__ = intersect

    def reduce(self, v) -> list:
        """Normal form of v modulo this subspace (zero at every pivot)."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            x = v[pc]
            if x:
                v = [f.reduce(a - x * b) if b else a for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match the ambient dimension")
        return not any(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(v) for v in other.basis)

    def __le__(self, other):
        return other.contains_subspace(self)

    def quotient_dim(self, sub: "Subspace") -> int:
        if not self.contains_subspace(sub):
            raise DimensionError("quotient_dim needs a subspace of U")
        return self.dim - sub.dim

    def coordinates(self, v) -> list:
        """Coordinates of v in the echelon basis; raises if v is outside."""
        if not self.contains(v):
            raise DimensionError("vector is not in the subspace")
        return [v[pc] for pc in self.pivots]

    def element(self, coords) -> list:
        return combine(self.field, coords, self.basis, self.ambient_dim)

    def complement_in(self, vectors):
        """Greedy selection of the given vectors that are independent modulo self."""
        chosen = []
        current = self
        for v in vectors:
            if not current.contains(v):
                chosen.append(list(v))
                current = current.sum(Subspace.span(self.field, self.ambient_dim, [v]))
        return chosen


def sum_all(field, ambient_dim, spaces) -> Subspace:
    vecs = []
    for s in spaces:
        vecs.extend(s.basis)
    return Subspace.span(field, ambient_dim, vecs)


def intersect_all(field, ambient_dim, spaces) -> Subspace:
    out = Subspace.full(field, ambient_dim)
    for s in spaces:
        out = out.intersect(s)
    return out
