"""Arithmetic in the prime field F_p and dense linear algebra over it.

Field elements are plain integers in [0, p); the modulus lives in a
`PrimeField` context shared by every value of one computation.  Matrices
are small and dense; row reduction is delegated to the active kernel
backend.
"""

from . import kernels

# products of two residues must fit the compiled backend's 64-bit arithmetic
MAX_MODULUS = 2**31 - 1


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Context object for F_p; validates primality once, by trial division."""

    __slots__ = ("p",)

    def __init__(self, p):
        if not isinstance(p, int):
            raise TypeError("modulus must be an integer")
        if p > MAX_MODULUS:
            raise ValueError(f"modulus {p} exceeds the supported bound {MAX_MODULUS}")
        if not is_prime(p):
            raise ValueError(f"modulus must be prime, got {p}")
        self.p = p

    def reduce(self, x):
        return x % self.p

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        d = a - b
        return d + self.p if d < 0 else d

    def neg(self, a):
        return self.p - a if a else 0

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        """Multiplicative inverse; zero input raises ZeroDivisionError."""
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        return pow(a, e, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class Matrix:
    """Dense row-major matrix over a PrimeField."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        self.field = field
        self.entries = [[v % field.p for v in row] for row in entries]
        self.rows = len(self.entries)
        if self.rows:
            self.cols = len(self.entries[0])
            if any(len(r) != self.cols for r in self.entries):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    def column(self, j):
        return [row[j] for row in self.entries]

    def transpose(self):
        return Matrix(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
            and self.cols == other.cols
        )

    def __repr__(self):
        return f"Matrix(F_{self.field.p}, {self.rows}x{self.cols}, {self.entries})"


def mat_mul(a, b):
    if a.field != b.field or a.cols != b.rows:
        raise ValueError("incompatible matrix product")
    p = a.field.p
    bt = b.transpose().entries
    out = [
        [sum(x * y for x, y in zip(ra, cb)) % p for cb in bt]
        for ra in a.entries
    ]
    return Matrix(a.field, out, cols=b.cols)


def mat_vec(m, v):
    if len(v) != m.cols:
        raise ValueError("vector length does not match column count")
    p = m.field.p
    return [sum(x * y for x, y in zip(row, v)) % p for row in m.entries]


def rref(m):
    """Row-reduced echelon form of m; returns (Matrix, pivot columns)."""
    reduced, pivots = kernels.rref(m.entries, m.field.p)
    return Matrix(m.field, reduced, cols=m.cols), pivots


def rank(m):
    return len(rref(m)[1])


def kernel_basis(m):
    """Basis of the right null space {v : m v = 0}.

    Each basis vector is canonical: one free variable is 1, all earlier
    free variables are 0.  Vectors are listed by increasing free column.
    """
    p = m.field.p
    reduced, pivots = kernels.rref(m.entries, p)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-reduced[i][f]) % p
        basis.append(v)
    return basis


def solve(m, b):
    """One solution of m x = b, or None if inconsistent.

    Free variables are set to 0, so the solution is unique exactly when
    m has full column rank.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    p = m.field.p
    aug = [row + [bv % p] for row, bv in zip(m.entries, b)]
    reduced, pivots = kernels.rref(aug, p)
    if m.cols in pivots:
        return None
    x = [0] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = reduced[i][m.cols]
    return x


def image_basis(m):
    """Basis of the column space, as the RREF rows of the transpose."""
    reduced, pivots = kernels.rref(m.transpose().entries, m.field.p)
    return [reduced[i] for i in range(len(pivots))]


def row_space(rows, field):
    """RREF rows spanning the same space as `rows` (zero rows dropped)."""
    if not rows:
        return []
    reduced, pivots = kernels.rref(rows, field.p)
    return [reduced[i] for i in range(len(pivots))]
