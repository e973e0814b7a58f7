"""Exact dense linear algebra: RREF, kernels, canonical subspaces, linear solves.

Elimination uses leftmost-nonzero pivoting with no size heuristics, so every
result is deterministic.  Subspaces store their basis in reduced row-echelon
form with zero rows stripped; two equal subspaces therefore have identical
stored bases, and equality is plain tuple comparison.
"""

from typing import Iterable, Optional, Sequence

from .errors import DimensionError, InvalidField
from .fields import FieldSpec


def vadd(u, v):
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def vneg(u):
    return tuple(-a for a in u)


def vdot(u, v):
    if len(u) != len(v):
        raise DimensionError(f"vector lengths {len(u)} vs {len(v)}")
    total = None
    for a, b in zip(u, v):
        ab = a * b
        total = ab if total is None else total + ab
    return total


def vzero(field: FieldSpec, n: int):
    z = field.zero()
    return (z,) * n


def is_zero_vec(u) -> bool:
    return not any(u)


class Matrix:
    """Immutable rectangular matrix over one exact field, row-major."""

    __slots__ = ("field", "data", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Iterable]):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if data:
            w = len(data[0])
            for row in data:
                if len(row) != w:
                    raise DimensionError("ragged rows")
        else:
            w = 0
        self.field = field
        self.data = data
        self.nrows = len(data)
        self.ncols = w if data else 0

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = field.zero()
        return cls(field, [[z] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field: FieldSpec, cols: Sequence[Sequence]) -> "Matrix":
        if not cols:
            return cls(field, [])
        n = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def column(self, j: int):
        return tuple(row[j] for row in self.data)

    def mul_vec(self, v):
        if len(v) != self.ncols:
            raise DimensionError(f"matrix is {self.nrows}x{self.ncols}, vector has {len(v)}")
        if self.ncols == 0:
            return (self.field.zero(),) * self.nrows
        return tuple(vdot(row, v) for row in self.data)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise InvalidField("mixed fields in matmul")
        if self.ncols != other.nrows:
            raise DimensionError(f"{self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        cols = [other.column(j) for j in range(other.ncols)]
        return Matrix(self.field, [[vdot(row, c) for c in cols] for row in self.data])

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [self.column(j) for j in range(self.ncols)])

    def minus_scalar_diag(self, lam) -> "Matrix":
        """self - lam*I (square only)."""
        if self.nrows != self.ncols:
            raise DimensionError("not square")
        lam = self.field.coerce(lam)
        rows = [list(row) for row in self.data]
        for i in range(self.nrows):
            rows[i][i] = rows[i][i] - lam
        return Matrix(self.field, rows)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.data))

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field.kind})"


def _rref_rows(field: FieldSpec, rows):
    """In-place Gauss-Jordan on a list of lists; returns pivot column list."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if rows[i][c]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        pv = rows[r][c]
        if pv != field.one():
            inv = field.one() / pv
            rows[r] = [inv * x for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> Matrix:
    rows = [list(row) for row in m.data]
    _rref_rows(m.field, rows)
    return Matrix(m.field, rows)


def det(m: Matrix):
    """Determinant by forward elimination with exact division."""
    if m.nrows != m.ncols:
        raise DimensionError("determinant of a non-square matrix")
    n = m.nrows
    if n == 0:
        return m.field.one()
    rows = [list(row) for row in m.data]
    result = m.field.one()
    for c in range(n):
        k = next((i for i in range(c, n) if rows[i][c]), None)
        if k is None:
            return m.field.zero()
        if k != c:
            rows[c], rows[k] = rows[k], rows[c]
            result = -result
        pv = rows[c][c]
        result = result * pv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return result


class Subspace:
    """Subspace of F^n held as a canonical RREF basis (zero rows stripped)."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient: int, basis, pivots):
        self.field = field
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient: int, vectors) -> "Subspace":
        rows = []
        for v in vectors:
            v = [field.coerce(x) for x in v]
            if len(v) != ambient:
                raise DimensionError(f"vector length {len(v)} in ambient {ambient}")
            rows.append(v)
        if rows:
            pivots = _rref_rows(field, rows)
            basis = tuple(tuple(r) for r in rows[: len(pivots)])
        else:
            pivots, basis = [], ()
        return cls(field, ambient, basis, tuple(pivots))

    @classmethod
    def zero(cls, field: FieldSpec, ambient: int) -> "Subspace":
        return cls(field, ambient, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient: int) -> "Subspace":
        eye = Matrix.identity(field, ambient)
        return cls(field, ambient, eye.data, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_ambient(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionError("subspaces live in different ambient spaces")

    def reduce(self, v):
        """Residue of v after subtracting its projection onto the basis rows."""
        v = list(v)
        if len(v) != self.ambient:
            raise DimensionError(f"vector length {len(v)} in ambient {self.ambient}")
        for row, p in zip(self.basis, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v) -> bool:
        return is_zero_vec(self.reduce(v))

    def coords(self, v):
        """Coefficients of v on the stored basis, or None if v is outside."""
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: rref [[u|u],[v|0]]; rows with zero left half span the meet."""
        self._check_ambient(other)
        z = self.field.zero()
        rows = [list(b) + list(b) for b in self.basis]
        rows += [list(b) + [z] * self.ambient for b in other.basis]
        if not rows:
            return Subspace.zero(self.field, self.ambient)
        _rref_rows(self.field, rows)
        n = self.ambient
        out = [r[n:] for r in rows if not any(r[:n]) and any(r[n:])]
        return Subspace.from_vectors(self.field, self.ambient, out)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(b) for b in self.basis)

    def basis_vectors(self):
        return self.basis

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of F^{self.ambient})"


def kernel(m: Matrix) -> Subspace:
    """Exact null space {v : m v = 0}."""
    if m.nrows == 0 or m.ncols == 0:
        return Subspace.full(m.field, m.ncols)
    rows = [list(row) for row in m.data]
    pivots = _rref_rows(m.field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    zero, one = m.field.zero(), m.field.one()
    basis = []
    for f in free:
        v = [zero] * m.ncols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(v)
    return Subspace.from_vectors(m.field, m.ncols, basis)


def solve_linear(m: Matrix, b):
    """Solve m x = b.  Returns (particular | None, kernel(m))."""
    if len(b) != m.nrows:
        raise DimensionError(f"rhs length {len(b)} for {m.nrows} rows")
    b = [m.field.coerce(x) for x in b]
    rows = [list(row) + [bv] for row, bv in zip(m.data, b)]
    ker = kernel(m)
    if not rows:
        return vzero(m.field, m.ncols), ker
    pivots = _rref_rows(m.field, rows)
    if m.ncols in pivots:
        return None, ker
    x = [m.field.zero()] * m.ncols
    for r, p in enumerate(pivots):
        x[p] = rows[r][m.ncols]
    return tuple(x), ker


def invert(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.nrows
    eye = Matrix.identity(m.field, n)
    rows = [list(row) + list(eye_row) for row, eye_row in zip(m.data, eye.data)]
    pivots = _rref_rows(m.field, rows)
    # pivots escaping into the augmented half mean the left half was singular
    if pivots != list(range(n)):
        raise DimensionError("matrix is singular")
    return Matrix(m.field, [r[n:] for r in rows])


class EchelonAccumulator:
    """Incrementally maintained RREF basis; used to build large kernels cheaply.

    Rows are fed one at a time; each is reduced against the current basis and
    inserted if independent.  The final state matches rref() of the stacked rows.
    """

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows = []   # kept in pivot order
        self.pivots = []

    def add_row(self, row) -> bool:
        v = list(row)
        for r, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [a - f * b for a, b in zip(v, r)]
        lead = next((c for c in range(self.ncols) if v[c]), None)
        if lead is None:
            return False
        inv = self.field.one() / v[lead]
        v = [inv * x for x in v]
        for i, (r, p) in enumerate(zip(self.rows, self.pivots)):
            f = r[lead]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(r, v)]
        at = next((i for i, p in enumerate(self.pivots) if p > lead), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, lead)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def kernel(self) -> Subspace:
        pivot_set = set(self.pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for f in free:
            v = [zero] * self.ncols
            v[f] = one
            for r, p in zip(self.rows, self.pivots):
                v[p] = -r[f]
            basis.append(v)
        return Subspace.from_vectors(self.field, self.ncols, basis)
