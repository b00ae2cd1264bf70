"""Finite-dimensional algebras given by structure constants."""
from __future__ import annotations


class AlgebraError(ValueError):
    pass


class FiniteAlgebra:
    """Associative unital algebra on a basis e_0..e_{m-1}.

    `table[i][j]` is a tuple of (k, c) pairs with e_i e_j = sum c e_k; only
    nonzero coefficients are stored.  `generators` optionally lists elements
    generating the radical (used by the radical computations).
    """

    def __init__(self, field, labels, table, unit, generators=None, generator_names=None,
                 check=True):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self.table = [list(row) for row in table]
        self.unit = list(unit)
        self.generators = [list(g) for g in generators] if generators is not None else None
        self.generator_names = list(generator_names) if generator_names else None
        if len(self.table) != self.dim or any(len(r) != self.dim for r in self.table):
            raise AlgebraError("structure table has the wrong shape")
        self._nonzero = [[j for j in range(self.dim) if self.table[i][j]] for i in range(self.dim)]
        if check:
            self.check_unit()
            self.check_associative()

    def __repr__(self):
        return f"FiniteAlgebra(dim={self.dim}, field={self.field})"

    def __eq__(self, other):
        return (isinstance(other, FiniteAlgebra) and self.field == other.field
                and self.table == other.table and self.unit == other.unit)

    def basis_vector(self, i):
        return self.field.unit_vector(self.dim, i)

    def multiply(self, a, b):
        f = self.field
        out = [0] * self.dim
        nzb = [(j, y) for j, y in enumerate(b) if y]
        if not nzb:
            return f.zeros(self.dim)
        for i, x in enumerate(a):
            if not x:
                continue
            row = self.table[i]
            for j, y in nzb:
                xy = x * y
                for k, c in row[j]:
                    out[k] += xy * c
        return [f.reduce(f(0) + v) for v in out]

    def left_images(self, a):
        """[a e_j for each basis j]: columns of left multiplication by a."""
        return [self.multiply(a, self.basis_vector(j)) for j in range(self.dim)]

    def right_images(self, a):
        return [self.multiply(self.basis_vector(j), a) for j in range(self.dim)]

    def check_unit(self):
        for i in range(self.dim):
            e = self.basis_vector(i)
            if self.multiply(self.unit, e) != e or self.multiply(e, self.unit) != e:
                raise AlgebraError(f"unit is not a two-sided identity on basis element {i}")

    def check_associative(self):
        f = self.field
        nz = self._nonzero
        t = self.table
        for i in range(self.dim):
            for j in range(self.dim):
                ij = t[i][j]
                ks = set(nz[j])
                for k_, _ in ij:
                    ks.update(nz[k_])
                for k in ks:
                    left = {}
                    for s, c in ij:
                        for r, d in t[s][k]:
                            left[r] = left.get(r, 0) + c * d
                    right = {}
                    for s, c in t[j][k]:
                        for r, d in t[i][s]:
                            right[r] = right.get(r, 0) + c * d
                    left = {r: f.reduce(v) for r, v in left.items() if f.reduce(v)}
                    right = {r: f.reduce(v) for r, v in right.items() if f.reduce(v)}
                    if left != right:
                        raise AlgebraError(f"associativity fails on basis triple ({i},{j},{k})")

    def structure_constant(self, i, j, k):
        for kk, c in self.table[i][j]:
            if kk == k:
                return c
        return self.field.zero
