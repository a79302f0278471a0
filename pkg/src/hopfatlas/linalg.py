"""Exact linear algebra over Q(zeta_N).

Vectors are sparse dicts {coordinate: FieldElem}; subspaces carry a canonical
reduced row-echelon basis so equal subspaces have identical representations.
All elimination is exact; ambient dimensions go up to dim(H)^2 for tensor
squares, so the row operations stay sparse throughout.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import FieldElem


def spvec(order, items=None):
    """Sparse vector from {index: coeff-like}; zero entries dropped."""
    out = {}
    if items:
        for i, c in items.items() if isinstance(items, dict) else items:
            if not isinstance(c, FieldElem):
                c = FieldElem.from_rational(c, order)
            if c:
                out[i] = c
    return out


def sp_add_into(acc: dict, vec: dict, scale=None):
    for i, c in vec.items():
        t = c if scale is None else c * scale
        cur = acc.get(i)
        s = t if cur is None else cur + t
        if s:
            acc[i] = s
        else:
            acc.pop(i, None)
    return acc


def sp_scale(vec: dict, scale) -> dict:
    return {i: c * scale for i, c in vec.items()} if scale else {}


def sp_from_dense(order, dense) -> dict:
    out = {}
    for i, c in enumerate(dense):
        if not isinstance(c, FieldElem):
            c = FieldElem.from_rational(c, order)
        if c:
            out[i] = c
    return out


def sp_to_dense(order, vec: dict, length: int):
    zero = FieldElem.zero(order)
    return tuple(vec.get(i, zero) for i in range(length))


class Echelon:
    """Incremental forward echelon of sparse rows; canonicalize() yields RREF."""

    def __init__(self, order: int, ambient: int):
        self.order = order
        self.ambient = ambient
        self.rows = {}  # pivot column -> row dict, pivot coefficient 1

    def reduce(self, vec: dict) -> dict:
        vec = dict(vec)
        while vec:
            p = min(vec)
            row = self.rows.get(p)
            if row is None:
                return vec
            sp_add_into(vec, row, -vec[p])
        return vec

    def insert(self, vec: dict) -> bool:
        """Reduce and insert; returns True if the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        p = min(res)
        inv = res[p].inverse()
        self.rows[p] = {i: c * inv for i, c in res.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def canonical_rows(self) -> list[dict]:
        # back-eliminate so entries above pivots vanish; return rows by pivot order
        pivots = sorted(self.rows)
        rows = {p: dict(self.rows[p]) for p in pivots}
        for p in reversed(pivots):
            for q in pivots:
                if q >= p:
                    break
                c = rows[q].get(p)
                if c:
                    sp_add_into(rows[q], rows[p], -c)
        return [rows[p] for p in pivots]


class Subspace:
    """Exact subspace of k^ambient with canonical RREF basis."""

    __slots__ = ("order", "ambient", "basis", "_pivots")

    def __init__(self, order: int, ambient: int, canonical_rows):
        self.order = order
        self.ambient = ambient
        rows = []
        for r in canonical_rows:
            rows.append(tuple(sorted(((i, c) for i, c in r.items()), key=lambda t: t[0])))
        self.basis = tuple(rows)
        self._pivots = tuple(r[0][0] for r in rows)

    @classmethod
    def from_vectors(cls, order: int, ambient: int, vectors) -> "Subspace":
        ech = Echelon(order, ambient)
        for v in vectors:
            ech.insert(v)
        return cls(order, ambient, ech.canonical_rows())

    @classmethod
    def zero(cls, order: int, ambient: int) -> "Subspace":
        return cls(order, ambient, [])

    @classmethod
    def full(cls, order: int, ambient: int) -> "Subspace":
        one = FieldElem.one(order)
        return cls(order, ambient, [{i: one} for i in range(ambient)])

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_vectors(self) -> list[dict]:
        return [dict(r) for r in self.basis]

    def _echelon(self) -> Echelon:
        ech = Echelon(self.order, self.ambient)
        for r in self.basis:
            ech.rows[r[0][0]] = dict(r)
        return ech

    def reduce(self, vec: dict) -> dict:
        return self._echelon().reduce(vec)

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def contains_subspace(self, other: "Subspace") -> bool:
        ech = self._echelon()
        return all(not ech.reduce(dict(r)) for r in other.basis)

    def join(self, other: "Subspace") -> "Subspace":
        assert self.ambient == other.ambient
        ech = self._echelon()
        for r in other.basis:
            ech.insert(dict(r))
        return Subspace(self.order, self.ambient, ech.canonical_rows())

    def meet(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: echelonize rows [v|v] for v in self, [w|0] for w in other."""
        assert self.ambient == other.ambient
        n = self.ambient
        ech = Echelon(self.order, 2 * n)
        for r in self.basis:
            row = dict(r)
            row.update({i + n: c for i, c in r})
            ech.insert(row)
        for r in other.basis:
            ech.insert(dict(r))
        out = []
        for p, row in ech.rows.items():
            if p >= n:
                out.append({i - n: c for i, c in row.items()})
        return Subspace.from_vectors(self.order, n, out)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.order == other.order
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.order, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


class LinearMap:
    """Exact linear map; matrix[i][j] = coefficient of target basis i in image of source j."""

    __slots__ = ("order", "source_dim", "target_dim", "columns")

    def __init__(self, order: int, source_dim: int, target_dim: int, columns):
        self.order = order
        self.source_dim = source_dim
        self.target_dim = target_dim
        cols = []
        for c in columns:
            cols.append(c if isinstance(c, dict) else sp_from_dense(order, c))
        assert len(cols) == source_dim
        self.columns = cols

    @classmethod
    def from_columns(cls, order, source_dim, target_dim, columns):
        return cls(order, source_dim, target_dim, columns)

    @classmethod
    def identity(cls, order, dim):
        one = FieldElem.one(order)
        return cls(order, dim, dim, [{i: one} for i in range(dim)])

    def apply(self, vec: dict) -> dict:
        out = {}
        for j, c in vec.items():
            sp_add_into(out, self.columns[j], c)
        return out

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        assert inner.target_dim == self.source_dim
        cols = [self.apply(c) for c in inner.columns]
        return LinearMap(self.order, inner.source_dim, self.target_dim, cols)

    def image(self) -> Subspace:
        return Subspace.from_vectors(self.order, self.target_dim, self.columns)

    def rank(self) -> int:
        return self.image().dim

    def kernel(self) -> Subspace:
        return kernel_of_columns(self.order, self.target_dim, self.columns, self.source_dim)

    def is_bijective(self) -> bool:
        return self.source_dim == self.target_dim and self.rank() == self.source_dim

    def inverse(self) -> "LinearMap":
        assert self.is_bijective()
        n = self.source_dim
        ech = Echelon(self.order, 2 * n)
        one = FieldElem.one(self.order)
        for j in range(n):
            row = {i: c for i, c in self.columns[j].items()}
            row[n + j] = one
            ech.insert(row)
        cols = [None] * n
        for row in ech.canonical_rows():
            items = sorted(row.items())
            p = items[0][0]
            assert p < n
            cols[p] = {i - n: c for i, c in items if i >= n}
        return LinearMap(self.order, n, n, cols)

    def transpose(self) -> "LinearMap":
        cols = [{} for _ in range(self.target_dim)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                cols[i][j] = c
        return LinearMap(self.order, self.target_dim, self.source_dim, cols)

    def embed(self, target_order: int) -> "LinearMap":
        cols = [{i: c.embed(target_order) for i, c in col.items()} for col in self.columns]
        return LinearMap(target_order, self.source_dim, self.target_dim, cols)

    def __eq__(self, other):
        return (
            isinstance(other, LinearMap)
            and self.order == other.order
            and self.source_dim == other.source_dim
            and self.target_dim == other.target_dim
            and self.columns == other.columns
        )


def kernel_of_columns(order, ambient, columns, nvars) -> Subspace:
    """Kernel of the map sending e_j to columns[j] (a subspace of k^nvars)."""
    ech = Echelon(order, ambient + nvars)
    one = FieldElem.one(order)
    out = []
    for j in range(nvars):
        row = {i: c for i, c in columns[j].items()}
        row[ambient + j] = one
        res = ech.reduce(row)
        if res and min(res) >= ambient:
            out.append({i - ambient: c for i, c in res.items()})
        else:
            ech.insert(res)
    return Subspace.from_vectors(order, nvars, out)


def preimage_of_subspace(order, columns, nvars, target: Subspace) -> Subspace:
    """{v : M v in target} for the map with the given columns."""
    residuals = [target.reduce(col) for col in columns]
    return kernel_of_columns(order, target.ambient, residuals, nvars)


def solve_column(order, ambient, columns, nvars, rhs: dict):
    """One solution x of sum x_j columns[j] = rhs, or None."""
    ech = Echelon(order, ambient + nvars)
    one = FieldElem.one(order)
    for j in range(nvars):
        row = dict(columns[j])
        row[ambient + j] = one
        ech.insert(row)
    res = ech.reduce(dict(rhs))
    if res and min(res) < ambient:
        return None
    # res = rhs - sum x_j col_j supported on tag coordinates only
    return {j - ambient: -c for j, c in res.items()}
