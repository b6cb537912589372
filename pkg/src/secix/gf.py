"""Exact arithmetic and linear algebra over prime fields GF(q).

Field elements are plain ints reduced mod q; matrices are dense integer
arrays.  Row reduction uses leftmost-pivot / first-nonzero-row ordering,
so reduced forms, solutions, and nullspace bases are deterministic
across runs.  Everything is integer-exact -- no floating point anywhere.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "GF",
    "FieldMatrix",
    "is_prime",
    "smallest_prime_at_least",
    "vandermonde",
]


def is_prime(n: int) -> bool:
    """Trial-division primality test (moduli here are desk-scale)."""
    if n < 2:
        return False
    if n in (2, 3):
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def smallest_prime_at_least(n: int) -> int:
    candidate = max(2, int(n))
    while not is_prime(candidate):
        candidate += 1
    return candidate


def _checked_modulus(q) -> int:
    q = int(q)
    if not is_prime(q):
        raise ValueError(f"field modulus must be prime, got {q}")
    return q


class GF:
    """Arithmetic context for GF(q), q prime.

    Elements are ints in [0, q).  Inputs are reduced mod q on the way
    in, so any int is accepted; results are always canonical.
    """

    __slots__ = ("q",)

    def __init__(self, q: int):
        self.q = _checked_modulus(q)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return (-a) % self.q

    def inv(self, a: int) -> int:
        """Multiplicative inverse.  Raises ZeroDivisionError for 0."""
        a %= self.q
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        return pow(a, self.q - 2, self.q)

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other):
        return isinstance(other, GF) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __repr__(self):
        return f"GF({self.q})"


class FieldMatrix:
    """Immutable dense matrix over GF(q).

    Entries are stored as a read-only int64 array, reduced mod q at
    construction.  Operations between matrices require equal moduli and
    raise ValueError otherwise.
    """

    __slots__ = ("q", "data")

    def __init__(self, q: int, data):
        self.q = _checked_modulus(q)
        arr = np.array(data, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        arr %= self.q
        arr.setflags(write=False)
        self.data = arr

    # ---- constructors -------------------------------------------------

    @classmethod
    def zeros(cls, q: int, rows: int, cols: int) -> "FieldMatrix":
        return cls(q, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, q: int, n: int) -> "FieldMatrix":
        return cls(q, np.eye(n, dtype=np.int64))

    @classmethod
    def column(cls, q: int, values) -> "FieldMatrix":
        return cls(q, np.array(list(values), dtype=np.int64).reshape(-1, 1))

    # ---- shape accessors ----------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def to_lists(self):
        """Row-major nested lists of plain ints (for JSON)."""
        return [[int(v) for v in row] for row in self.data]

    def column_values(self, j: int):
        return tuple(int(v) for v in self.data[:, j])

    # ---- comparisons ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FieldMatrix)
            and other.q == self.q
            and other.data.shape == self.data.shape
            and np.array_equal(other.data, self.data)
        )

    def __hash__(self):
        return hash((self.q, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"FieldMatrix(q={self.q}, {self.to_lists()})"

    def _same_field(self, other: "FieldMatrix", opname: str) -> None:
        if not isinstance(other, FieldMatrix):
            raise TypeError(f"{opname} expects a FieldMatrix, got {type(other).__name__}")
        if other.q != self.q:
            raise ValueError(f"{opname} over mismatched fields GF({self.q}) vs GF({other.q})")

    # ---- arithmetic ------------------------------------------------------

    def __add__(self, other):
        self._same_field(other, "addition")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return FieldMatrix(self.q, (self.data + other.data) % self.q)

    def __sub__(self, other):
        self._same_field(other, "subtraction")
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return FieldMatrix(self.q, (self.data - other.data) % self.q)

    def __matmul__(self, other):
        self._same_field(other, "matrix product")
        if self.cols != other.rows:
            raise ValueError(f"inner dimensions differ: {self.shape} @ {other.shape}")
        return FieldMatrix(self.q, (self.data @ other.data) % self.q)

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.q, self.data.T)

    def hstack(self, other: "FieldMatrix") -> "FieldMatrix":
        self._same_field(other, "hstack")
        if self.rows != other.rows:
            raise ValueError(f"row counts differ: {self.rows} vs {other.rows}")
        return FieldMatrix(self.q, np.hstack([self.data, other.data]))

    def is_zero(self) -> bool:
        return not self.data.any()

    # ---- elimination -----------------------------------------------------

    def rref(self):
        """Reduced row-echelon form.

        Returns (reduced matrix, pivot column indices).  Pivoting is
        deterministic: scan columns left to right, take the first row at
        or below the working row with a nonzero entry.
        """
        q = self.q
        work = self.data.copy()
        nrows, ncols = work.shape
        pivots = []
        r = 0
        for c in range(ncols):
            if r >= nrows:
                break
            nz = np.nonzero(work[r:, c])[0]
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                work[[r, p]] = work[[p, r]]
            inv = pow(int(work[r, c]), q - 2, q)
            work[r] = (work[r] * inv) % q
            for rr in range(nrows):
                if rr != r and work[rr, c]:
                    work[rr] = (work[rr] - work[rr, c] * work[r]) % q
            pivots.append(c)
            r += 1
        return FieldMatrix(q, work), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def solve(self, b: "FieldMatrix"):
        """One solution x of self @ x = b, or None when inconsistent.

        b must be a column.  Free variables are set to 0, so when the
        system has a unique solution, that solution is returned.
        """
        self._same_field(b, "solve")
        if b.cols != 1 or b.rows != self.rows:
            raise ValueError(f"right-hand side must be {self.rows}x1, got {b.shape}")
        augmented = self.hstack(b)
        reduced, pivots = augmented.rref()
        if self.cols in pivots:
            return None  # a pivot in the constants column: 0 = nonzero
        x = np.zeros((self.cols, 1), dtype=np.int64)
        for row_idx, col in enumerate(pivots):
            x[col, 0] = reduced.data[row_idx, self.cols]
        return FieldMatrix(self.q, x)

    def nullspace(self) -> "FieldMatrix":
        """Basis of {v : self @ v = 0}, returned as matrix columns.

        Column count equals cols - rank; a full-rank matrix yields a
        (cols x 0) matrix.
        """
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = np.zeros((self.cols, len(free)), dtype=np.int64)
        for k, f in enumerate(free):
            basis[f, k] = 1
            for row_idx, col in enumerate(pivots):
                basis[col, k] = (-int(reduced.data[row_idx, f])) % self.q
        return FieldMatrix(self.q, basis)


def vandermonde(rows: int, cols: int, q: int) -> FieldMatrix:
    """Vandermonde matrix with evaluation points 0, 1, ..., rows-1.

    Row i is [1, a_i, a_i^2, ..., a_i^(cols-1)] with a_i = i.  Distinct
    points make every cols-row subset invertible, which is what makes
    the matrix usable as the transposed generator of an MDS code; this
    needs q >= rows.
    """
    q = _checked_modulus(q)
    if rows < 0 or cols < 0:
        raise ValueError("matrix dimensions must be nonnegative")
    if cols > rows:
        raise ValueError(f"need cols <= rows, got {rows}x{cols}")
    if q < rows:
        raise ValueError(f"GF({q}) has fewer than {rows} distinct evaluation points; need q >= {rows}")
    data = [[pow(i, e, q) for e in range(cols)] for i in range(rows)]
    return FieldMatrix(q, np.array(data, dtype=np.int64).reshape(rows, cols))
