"""Exact linear algebra over the rationals (reduced row echelon form) and over
the integers (row-style Hermite normal form).

These bases witness reachable submodules of weighted automata: over a field a
subspace always has a canonical echelon basis, and over Z every sublattice of
Z^n has a canonical HNF basis, which is what makes minimisation over a
principal ideal domain effective.

Canonical forms used throughout:
  * FieldBasis: pivots strictly increasing, pivot entries 1, pivot columns
    zero elsewhere, no zero rows.
  * IntegerBasis: pivots strictly increasing, pivot entries positive, entries
    above a pivot reduced into [0, pivot), no zero rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError
from .semiring import INT, RATIONAL, Matrix


def hnf(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form of an integer matrix.

    Returns (h, u) with u * a = h, u unimodular (|det u| = 1), and h in
    canonical shape with its zero rows collected at the bottom.  The row
    lattice of h equals the row lattice of a.  Pivot selection takes the
    smallest absolute nonzero entry of the current column, which keeps
    intermediate entries modest; arbitrary-precision integers absorb the rest.
    """
    if a.semiring is not INT:
        raise DimensionError("hnf expects an integer matrix")
    m, n = a.n_rows, a.n_cols
    work = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def swap(i, j):
        if i != j:
            work[i], work[j] = work[j], work[i]
            u[i], u[j] = u[j], u[i]

    def submul(i, j, q):
        # row_i -= q * row_j
        if q:
            wi, wj = work[i], work[j]
            for k in range(n):
                wi[k] -= q * wj[k]
            ui, uj = u[i], u[j]
            for k in range(m):
                ui[k] -= q * uj[k]

    def negate(i):
        work[i] = [-x for x in work[i]]
        u[i] = [-x for x in u[i]]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            live = [i for i in range(r, m) if work[i][c] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(work[i][c]))
            swap(r, best)
            done = True
            for i in range(r + 1, m):
                q = work[i][c] // work[r][c]
                submul(i, r, q)
                if work[i][c] != 0:
                    done = False
            if done:
                break
        if work[r][c] != 0:
            if work[r][c] < 0:
                negate(r)
            for i in range(r):
                submul(i, r, work[i][c] // work[r][c])
            r += 1

    h = Matrix(INT, m, n, tuple(tuple(row) for row in work))
    um = Matrix(INT, m, m, tuple(tuple(row) for row in u))
    return h, um


def det_int(a: Matrix) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    if a.n_rows != a.n_cols:
        raise DimensionError("determinant of a non-square matrix")
    n = a.n_rows
    if n == 0:
        return 1
    m = [list(row) for row in a.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def is_hnf_shape(rows: tuple[tuple[int, ...], ...]) -> bool:
    """Canonical-shape predicate for an integer basis (zero rows not allowed)."""
    last_pivot = -1
    for row in rows:
        pivots = [j for j, v in enumerate(row) if v != 0]
        if not pivots:
            return False
        p = pivots[0]
        if p <= last_pivot or row[p] <= 0:
            return False
        last_pivot = p
    # entries above each pivot reduced into [0, pivot)
    for i, row in enumerate(rows):
        p = next(j for j, v in enumerate(row) if v != 0)
        for k in range(i):
            if not 0 <= rows[k][p] < row[p]:
                return False
    return True


@dataclass(frozen=True)
class IntegerBasis:
    """Canonical HNF basis of a sublattice of Z^ambient; empty rows = zero lattice."""

    ambient: int
    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ambient:
                raise DimensionError(f"basis row of {len(row)} in ambient {self.ambient}")

    @classmethod
    def from_rows(cls, ambient: int, rows) -> "IntegerBasis":
        rows = tuple(tuple(int(v) for v in row) for row in rows)
        if not rows:
            return cls(ambient)
        h, _ = hnf(Matrix(INT, len(rows), ambient, rows))
        return cls(ambient, tuple(r for r in h.entries if any(r)))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def matrix(self) -> Matrix:
        return Matrix(INT, len(self.rows), self.ambient, self.rows)

    def coordinates(self, v) -> tuple[int, ...] | None:
        """Integer coefficients c with c * rows = v, or None when v is outside the lattice."""
        if len(v) != self.ambient:
            raise DimensionError(f"vector of {len(v)} in ambient {self.ambient}")
        residue = list(v)
        coeffs = []
        for row in self.rows:
            p = next(j for j, x in enumerate(row) if x != 0)
            if residue[p] % row[p] != 0:
                return None
            q = residue[p] // row[p]
            coeffs.append(q)
            if q:
                for j in range(p, self.ambient):
                    residue[j] -= q * row[j]
        if any(residue):
            return None
        return tuple(coeffs)

    def insert(self, v) -> tuple["IntegerBasis", bool]:
        """Smallest lattice containing this one and v; changed=False iff v was a member."""
        if self.coordinates(v) is not None:
            return self, False
        return IntegerBasis.from_rows(self.ambient, self.rows + (tuple(int(x) for x in v),)), True


@dataclass(frozen=True)
class FieldBasis:
    """Canonical reduced-echelon basis of a subspace of Q^ambient."""

    ambient: int
    rows: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        for row in self.rows:
            if len(row) != self.ambient:
                raise DimensionError(f"basis row of {len(row)} in ambient {self.ambient}")

    @property
    def rank(self) -> int:
        return len(self.rows)

    def matrix(self) -> Matrix:
        return Matrix(RATIONAL, len(self.rows), self.ambient, self.rows)

    def _pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x != 0) for row in self.rows]

    def coordinates(self, v) -> tuple[Fraction, ...] | None:
        if len(v) != self.ambient:
            raise DimensionError(f"vector of {len(v)} in ambient {self.ambient}")
        residue = [Fraction(x) for x in v]
        coeffs = []
        for row, p in zip(self.rows, self._pivots()):
            c = residue[p]  # pivot entries are 1 and pivot columns clear elsewhere
            coeffs.append(c)
            if c:
                for j in range(p, self.ambient):
                    residue[j] -= c * row[j]
        if any(residue):
            return None
        return tuple(coeffs)

    def insert(self, v) -> tuple["FieldBasis", bool]:
        residue = [Fraction(x) for x in v]
        if len(residue) != self.ambient:
            raise DimensionError(f"vector of {len(residue)} in ambient {self.ambient}")
        pivots = self._pivots()
        for row, p in zip(self.rows, pivots):
            c = residue[p]
            if c:
                for j in range(p, self.ambient):
                    residue[j] -= c * row[j]
        lead = next((j for j, x in enumerate(residue) if x != 0), None)
        if lead is None:
            return self, False
        inv = residue[lead]
        new_row = tuple(x / inv for x in residue)
        rows = []
        inserted = False
        for row, p in zip(self.rows, pivots):
            if not inserted and lead < p:
                rows.append(new_row)
                inserted = True
            rows.append(row)
        if not inserted:
            rows.append(new_row)
        # clear the new pivot column in the other rows to restore reduced form
        cleaned = []
        for row in rows:
            if row is new_row:
                cleaned.append(row)
                continue
            c = row[lead]
            if c:
                row = tuple(x - c * y for x, y in zip(row, new_row))
            cleaned.append(row)
        return FieldBasis(self.ambient, tuple(cleaned)), True


Basis = IntegerBasis | FieldBasis


def basis_insert(basis: Basis, v) -> tuple[Basis, bool]:
    """Insert a vector into a canonical basis; see IntegerBasis/FieldBasis.insert."""
    return basis.insert(tuple(v))


def coordinates(basis: Basis, v):
    """Coefficients of v in the basis, or None when v lies outside the span/lattice."""
    return basis.coordinates(tuple(v))


def rank(basis: Basis) -> int:
    return basis.rank
