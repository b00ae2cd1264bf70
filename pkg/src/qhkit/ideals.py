"""Left ideals of a finite algebra, their Hom spaces, and condition ⊠."""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import classify_local_selfinjective, opposite, radical
from .algebra_core import FiniteAlgebra
from .linalg import Subspace, _kernel_vectors, solve, sum_all
from .poset import Poset


class IdealError(ValueError):
    pass


class IdealModule:
    """A left ideal of `algebra` given by its subspace and an optional generator."""

    def __init__(self, algebra: FiniteAlgebra, space: Subspace, generator=None, check=True):
        self.algebra = algebra
        self.space = space
        self.generator = list(generator) if generator is not None else None
        B = algebra
        if check:
            for b in range(B.dim):
                e = B.basis_vector(b)
                for v in space.basis:
                    if not space.contains(B.multiply(e, v)):
                        raise IdealError("subspace is not closed under left multiplication")
            if self.generator is not None and _left_span(B, self.generator) != space:
                raise IdealError("generator does not generate the subspace")
        self.two_sided = all(space.contains(B.multiply(v, B.basis_vector(b)))
                             for v in space.basis for b in range(B.dim))

    @property
    def dim(self):
        return self.space.dim

    def __repr__(self):
        return f"IdealModule(dim={self.dim}, two_sided={self.two_sided})"

    def coords(self, v):
        return self.space.coordinates(v)


def _left_span(B, x):
    return Subspace.span(B.field, B.dim, [B.multiply(B.basis_vector(b), x) for b in range(B.dim)])


def ideal_from_generator(B: FiniteAlgebra, x) -> IdealModule:
    if not any(x):
        raise IdealError("generator must be nonzero")
    # B contains 1, so B*x is already closed under left multiplication
    return IdealModule(B, _left_span(B, x), x, check=False)


def _rad(B):
    r = getattr(B, "_radical_cache", None)
    if r is None:
        r = radical(B)
        B._radical_cache = r
    return r


def module_radical(M: IdealModule) -> Subspace:
    B = M.algebra
    return Subspace.span(B.field, B.dim, [B.multiply(r, v) for r in _rad(B).basis for v in M.space.basis])


def right_orbit(B, x) -> Subspace:
    """x*B."""
    return Subspace.span(B.field, B.dim, [B.multiply(x, B.basis_vector(b)) for b in range(B.dim)])


@dataclass
class MorphismTests:
    surjection_exists: bool
    injection_exists: bool


def surjects(M: IdealModule, N: IdealModule, rad_N=None) -> bool:
    """Is there a surjection M ->> N?  Uses that maps out of B*x are right
    multiplications, so the candidates for the image of x are x*B ∩ N."""
    if M.generator is None:
        raise IdealError("surjection test needs a generator of the source")
    if rad_N is None:
        rad_N = module_radical(N)
    images = right_orbit(M.algebra, M.generator).intersect(N.space)
    return not rad_N.contains_subspace(images)


def morphism_tests(M: IdealModule, N: IdealModule) -> MorphismTests:
    return MorphismTests(surjects(M, N), N.space.contains_subspace(M.space))


@dataclass
class HomSpace:
    source: IdealModule
    target: IdealModule
    basis: list  # matrices (target.dim x source.dim) in the echelon coordinates

    @property
    def dim(self):
        return len(self.basis)

    def apply(self, mat, v):
        """Image in B of a vector v of the source, under the map `mat`."""
        f = self.source.algebra.field
        c = self.source.coords(v)
        out = [f.reduce(sum(m * x for m, x in zip(row, c) if m)) for row in mat]
        return self.target.space.element(out)


def action_matrices(M: IdealModule):
    """For each basis b of B, the matrix of m -> b*m in the echelon coordinates of M."""
    B = M.algebra
    mats = []
    for b in range(B.dim):
        e = B.basis_vector(b)
        cols = [M.coords(B.multiply(e, v)) for v in M.space.basis]
        mats.append([[cols[c][r] for c in range(M.dim)] for r in range(M.dim)])
    return mats


def hom_space(M: IdealModule, N: IdealModule) -> HomSpace:
    """All B-linear maps M -> N, as matrices X with X[r][c] the r-th coordinate
    of the image of the c-th basis vector of M."""
    f = M.algebra.field
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return HomSpace(M, N, [])
    am, an = action_matrices(M), action_matrices(N)
    nvar = dn * dm
    rows = []
    # X*Am_b - An_b*X = 0 for all b; unknown X[r][c] has index r*dm + c
    for Amb, Anb in zip(am, an):
        for r in range(dn):
            for c in range(dm):
                row = [0] * nvar
                for k in range(dm):
                    if Amb[k][c]:
                        row[r * dm + k] += Amb[k][c]
                for k in range(dn):
                    if Anb[r][k]:
                        row[k * dm + c] -= Anb[r][k]
                if any(row):
                    rows.append([f.reduce(f(0) + x) for x in row])
    kern = Subspace.span(f, nvar, _kernel_vectors(f, rows, nvar) if rows else
                         [f.unit_vector(nvar, i) for i in range(nvar)])
    basis = [[list(v[r * dm:(r + 1) * dm]) for r in range(dn)] for v in kern.basis]
    return HomSpace(M, N, basis)


def cover_multiplier(B: FiniteAlgebra, x_low, x_high):
    """First solution b (in RREF order) of x_low * b = x_high."""
    cols = [B.multiply(x_low, B.basis_vector(k)) for k in range(B.dim)]
    return solve(B.field, cols, x_high)


# condition ⊠


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, **self.detail}


@dataclass
class MaReport:
    passed: bool
    checks: list
    witnesses: list

    def check(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self):
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self):
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks],
                "witnesses": self.witnesses}


def check_condition_ma(B: FiniteAlgebra, L, poset: Poset, generator_images=None) -> MaReport:
    n = poset.n
    if len(L) != n:
        raise IdealError(f"family has {len(L)} members but the poset has {n} elements")
    checks = []
    witnesses = []

    cls = classify_local_selfinjective(B, generator_images)
    checks.append(Check("local_self_injective", cls.is_local and cls.is_self_injective, cls.to_dict()))
    checks.append(Check("dim_B_eq_n", B.dim == n, {"dim_B": B.dim, "n": n}))
    checks.append(Check("labeling", poset.labeling_ok(),
                        {"minima": poset.minima(), "maxima": poset.maxima()}))
    full = Subspace.full(B.field, B.dim)
    checks.append(Check("L1_eq_B", L[0].space == full, {"dim_L1": L[0].dim}))
    if not checks[-1].passed:
        witnesses.append({"check": "L1_eq_B", "dim_L1": L[0].dim, "dim_B": B.dim})

    rads = []
    bad_local, bad_two = [], []
    for i, M in enumerate(L, start=1):
        r = module_radical(M)
        rads.append(r)
        if r.dim != M.dim - 1:
            bad_local.append(i)
        if not M.two_sided:
            bad_two.append(i)
    checks.append(Check("local_members", not bad_local, {"failing": bad_local}))
    checks.append(Check("two_sided_members", not bad_two, {"failing": bad_two}))
    for i in bad_local:
        witnesses.append({"check": "local_members", "i": i, "dim": L[i - 1].dim,
                          "dim_rad": rads[i - 1].dim})

    bad_a = []
    if all(M.generator is not None for M in L):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                s = surjects(L[i - 1], L[j - 1], rads[j - 1])
                if s != poset.leq(i, j):
                    bad_a.append([i, j])
        checks.append(Check("condition_a", not bad_a, {"failing_pairs": bad_a}))
        for i, j in bad_a:
            witnesses.append({"check": "condition_a", "pair": [i, j],
                              "surjection_exists": not poset.leq(i, j), "expected": poset.leq(i, j)})
    else:
        checks.append(Check("condition_a", False, {"reason": "a family member has no generator"}))

    bad_b = []
    for i in range(1, n + 1):
        above = [L[j - 1].space for j in poset.up(i) if j != i]
        s = sum_all(B.field, B.dim, above)
        if s != rads[i - 1]:
            bad_b.append(i)
            witnesses.append({"check": "condition_b", "i": i, "dim_rad": rads[i - 1].dim,
                              "dim_sum_above": s.dim,
                              "rad_in_sum": s.contains_subspace(rads[i - 1]),
                              "sum_in_rad": rads[i - 1].contains_subspace(s)})
    checks.append(Check("condition_b", not bad_b, {"failing": bad_b}))

    return MaReport(all(c.passed for c in checks), checks, witnesses)


def transported_family(B: FiniteAlgebra, L):
    """B^op together with the right ideals x_i*B, read as left ideals of B^op."""
    Bop = opposite(B)
    fam = []
    for M in L:
        if M.generator is None:
            raise IdealError("transport needs generators")
        fam.append(ideal_from_generator(Bop, M.generator))
    return Bop, fam


def opposite_transport(B: FiniteAlgebra, L, poset: Poset) -> MaReport:
    Bop, fam = transported_family(B, L)
    return check_condition_ma(Bop, fam, poset)
