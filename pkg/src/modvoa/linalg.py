"""Sparse exact linear algebra over F_p with vectors stored as {key: residue}."""
from __future__ import annotations


class RowSpace:
    """Incrementally built subspace kept in fully reduced row-echelon form.

    Every stored row has coefficient 1 at its pivot and 0 at every other pivot,
    so reducing a vector once per pivot key yields a canonical remainder.
    """

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        p = self.p
        out = dict(vec)
        for key in [k for k in out if k in self.rows]:
            c = out.get(key)
            if not c:
                continue
            for k2, v2 in self.rows[key].items():
                v = (out.get(k2, 0) - c * v2) % p
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        return out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict) -> bool:
        """Insert vec; return True when it enlarged the space."""
        p = self.p
        red = self.reduce(vec)
        if not red:
            return False
        pivot = max(red, key=_sort_key)
        inv = pow(red[pivot], -1, p)
        row = {k: v * inv % p for k, v in red.items()}
        for key, other in self.rows.items():
            c = other.get(pivot)
            if c:
                for k2, v2 in row.items():
                    v = (other.get(k2, 0) - c * v2) % p
                    if v:
                        other[k2] = v
                    else:
                        other.pop(k2, None)
        self.rows[pivot] = row
        return True

    def basis(self) -> list:
        return [dict(r) for _, r in sorted(self.rows.items(), key=lambda kv: _sort_key(kv[0]))]

    def copy(self) -> "RowSpace":
        other = RowSpace(self.p)
        other.rows = {k: dict(v) for k, v in self.rows.items()}
        return other


def _sort_key(key):
    return repr(key) if not isinstance(key, (int, tuple)) else key


def rank(vectors, p: int) -> int:
    space = RowSpace(p)
    for v in vectors:
        space.add(v)
    return space.rank


def kernel(images: list, p: int) -> list:
    """Basis of {c : sum_i c_i images[i] = 0}, each as {i: c_i}."""
    pivots: dict = {}
    out = []
    for idx, img in enumerate(images):
        vec = dict(img)
        combo = {idx: 1}
        while True:
            hit = next((k for k in vec if k in pivots), None)
            if hit is None:
                break
            row, rcombo = pivots[hit]
            c = vec[hit]
            for k2, v2 in row.items():
                v = (vec.get(k2, 0) - c * v2) % p
                if v:
                    vec[k2] = v
                else:
                    vec.pop(k2, None)
            for k2, v2 in rcombo.items():
                v = (combo.get(k2, 0) - c * v2) % p
                if v:
                    combo[k2] = v
                else:
                    combo.pop(k2, None)
        if not vec:
            out.append(combo)
            continue
        pivot = next(iter(vec))
        inv = pow(vec[pivot], -1, p)
        pivots[pivot] = ({k: v * inv % p for k, v in vec.items()},
                         {k: v * inv % p for k, v in combo.items()})
    return out


def solve_combination(columns: list, target: dict, p: int):
    """Some {i: x_i} with sum_i x_i columns[i] = target, or None."""
    pivots: dict = {}
    for idx, col in enumerate(columns):
        vec = dict(col)
        combo = {idx: 1}
        _eliminate(vec, combo, pivots, p)
        if vec:
            pivot = next(iter(vec))
            inv = pow(vec[pivot], -1, p)
            pivots[pivot] = ({k: v * inv % p for k, v in vec.items()},
                             {k: v * inv % p for k, v in combo.items()})
    vec = dict(target)
    combo: dict = {}
    _eliminate(vec, combo, pivots, p)
    if vec:
        return None
    return {k: (-v) % p for k, v in combo.items() if v % p}


def _eliminate(vec, combo, pivots, p):
    while True:
        hit = next((k for k in vec if k in pivots), None)
        if hit is None:
            return
        row, rcombo = pivots[hit]
        c = vec[hit]
        for k2, v2 in row.items():
            v = (vec.get(k2, 0) - c * v2) % p
            if v:
                vec[k2] = v
            else:
                vec.pop(k2, None)
        for k2, v2 in rcombo.items():
            v = (combo.get(k2, 0) - c * v2) % p
            if v:
                combo[k2] = v
            else:
                combo.pop(k2, None)
