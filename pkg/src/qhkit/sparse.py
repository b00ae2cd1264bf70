"""Sparse echelon bases over dict-vectors (column index -> coefficient).

Used for ideals in path and word spaces, where vectors have a handful of
nonzero entries among thousands of columns.
"""


class SparseEchelon:
    """Incrementally built echelon basis; row pivots are their smallest column."""

    def __init__(self, field):
        self.field = field
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        f = self.field
        v = {k: x for k, x in v.items() if x}
        rows = self.rows
        while True:
            hits = [c for c in v if c in rows]
            if not hits:
                return v
            c = min(hits)
            x = v[c]
            for k, y in rows[c].items():
                nv = f.reduce(v.get(k, 0) - x * y)
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)

    def insert(self, v: dict):
        """Add v to the span; returns the new echelon row or None if dependent."""
        r = self.reduce(v)
        if not r:
            return None
        c = min(r)
        inv = self.field.inv(r[c])
        row = {k: self.field.reduce(x * inv) for k, x in r.items()}
        self.rows[c] = row
        return row

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)

    @property
    def pivots(self):
        return set(self.rows)
