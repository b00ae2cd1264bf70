"""Finite posets on {1..n} given by cover pairs."""
from __future__ import annotations


class PosetError(ValueError):
    pass


class Poset:
    """Partial order on 1..n.  A pair (i, j) in `covers` means i < j."""

    def __init__(self, n: int, covers):
        if n < 1:
            raise PosetError("a poset needs at least one element")
        self.n = n
        self.covers = tuple(sorted({(int(i), int(j)) for i, j in covers}))
        for i, j in self.covers:
            if not (1 <= i <= n and 1 <= j <= n):
                raise PosetError(f"cover ({i},{j}) outside 1..{n}")
            if i == j:
                raise PosetError(f"cover ({i},{j}) is a loop")
        up = {i: {i} for i in range(1, n + 1)}
        succ = {i: [] for i in range(1, n + 1)}
        for i, j in self.covers:
            succ[i].append(j)
        # closure by DFS from every element
        for i in range(1, n + 1):
            stack = list(succ[i])
            while stack:
                k = stack.pop()
                if k not in up[i]:
                    up[i].add(k)
                    stack.extend(succ[k])
        for i in range(1, n + 1):
            for j in up[i]:
                if j != i and i in up[j]:
                    raise PosetError(f"covers contain a cycle through {i} and {j}")
        self._up = {i: frozenset(s) for i, s in up.items()}
        self._down = {i: frozenset(j for j in range(1, n + 1) if i in self._up[j])
                      for i in range(1, n + 1)}
        self._hasse = self._compute_hasse()

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.hasse() == other.hasse()

    def __hash__(self):
        return hash((self.n, self.hasse()))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.hasse())})"

    @property
    def elements(self):
        return range(1, self.n + 1)

    def leq(self, i, j) -> bool:
        return j in self._up[i]

    def lt(self, i, j) -> bool:
        return i != j and self.leq(i, j)

    def up(self, i) -> frozenset:
        """All j with j >= i."""
        return self._up[i]

    def down(self, i) -> frozenset:
        """All j with j <= i."""
        return self._down[i]

    def hasse(self) -> tuple:
        """The genuine cover pairs of the transitive closure."""
        return self._hasse

    def _compute_hasse(self):
        out = []
        for i in self.elements:
            for j in self._up[i]:
                if j == i:
                    continue
                if not any(k != i and k != j and self.leq(k, j) for k in self._up[i]):
                    out.append((i, j))
        return tuple(sorted(out))

    def upper_covers(self, i):
        return sorted(j for a, j in self.hasse() if a == i)

    def lower_covers(self, i):
        return sorted(a for a, j in self.hasse() if j == i)

    def minima(self):
        return [i for i in self.elements if self._down[i] == {i}]

    def maxima(self):
        return [i for i in self.elements if self._up[i] == {i}]

    def labeling_ok(self) -> bool:
        """Unique minimum labelled 1 and unique maximum labelled n."""
        return self.minima() == [1] and self.maxima() == [self.n]

    def linear_extension(self, subset):
        """Lexicographically first ordering of `subset` with smaller elements first."""
        left = set(subset)
        out = []
        while left:
            ready = [i for i in left if not any(self.lt(k, i) for k in left)]
            nxt = min(ready)
            out.append(nxt)
            left.remove(nxt)
        return out

    def chain(self, lo, hi):
        """Lexicographically first cover chain lo = c0 < c1 < ... < hi."""
        if not self.leq(lo, hi):
            raise PosetError(f"{lo} is not below {hi}")
        path = [lo]
        while path[-1] != hi:
            path.append(min(j for j in self.upper_covers(path[-1]) if self.leq(j, hi)))
        return path

    def opposite(self) -> "Poset":
        return Poset(self.n, [(j, i) for i, j in self.covers])

    def relabel(self, perm) -> "Poset":
        """perm maps old label -> new label."""
        return Poset(self.n, [(perm[i], perm[j]) for i, j in self.covers])
