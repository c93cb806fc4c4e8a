"""Exact scalar fields and dense linear algebra over them.

Scalars are arbitrary-precision rationals (``fractions.Fraction``) or
canonical residues in a prime field; no floating point appears anywhere.
Elimination always picks the lexicographically earliest nonzero pivot, so
ranks, echelon forms, kernel bases and particular solutions are canonical
and repeating a computation yields bit-identical output.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, FieldMismatchError

_SCALAR_RE = re.compile(r"[+-]?[0-9]+(/[0-9]+)?\Z")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Common scalar-string handling for the concrete fields."""

    def parse(self, text: str):
        """Parse a decimal integer or ``num/den`` string into a scalar.

        Raises ValueError on anything else, including a zero denominator.
        """
        if not isinstance(text, str) or _SCALAR_RE.fullmatch(text) is None:
            raise ValueError(f"malformed scalar string {text!r}")
        num, slash, den = text.partition("/")
        if slash:
            return self.from_quotient(int(num), int(den))
        return self(int(num))


class Rationals(Field):
    """The field of rational numbers, realized as ``fractions.Fraction``.

    Fractions are stored in lowest terms with positive denominator, which
    is exactly the canonical form required here.
    """

    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} into the rationals")

    def from_quotient(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise ValueError("zero denominator")
        return Fraction(num, den)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def format(self, x) -> str:
        return str(x)

    @property
    def spec_string(self) -> str:
        return "Q"

    def __eq__(self, other) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Rationals")

    def __repr__(self) -> str:
        return "Rationals()"


class FpElement:
    """A canonical residue modulo a prime, with field arithmetic.

    Mixed arithmetic with plain ints is allowed and reduces mod p; any
    other operand type is rejected, as is mixing distinct primes.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: "PrimeField", value: int):
        self.field = field
        self.value = value % field.p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot mix F_{self.field.p} and F_{other.field.p}"
                )
            return other
        if isinstance(other, int):
            return FpElement(self.field, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.field, self.value - other.value)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.field, other.value - self.value)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.field.p}")
        inv = pow(other.value, -1, self.field.p)
        return FpElement(self.field, self.value * inv)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(self.field, -self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FpElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __repr__(self) -> str:
        return f"FpElement({self.value} mod {self.field.p})"

    def __str__(self) -> str:
        return str(self.value)


class PrimeField(Field):
    """The prime field of integers modulo ``p``."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime >= 2, got {p!r}")
        self.p = p

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> FpElement:
        if isinstance(value, FpElement):
            if value.field != self:
                raise FieldMismatchError(
                    f"cannot coerce F_{value.field.p} element into F_{self.p}"
                )
            return value
        if isinstance(value, int):
            return FpElement(self, value)
        raise TypeError(f"cannot coerce {value!r} into F_{self.p}")

    def from_quotient(self, num: int, den: int) -> FpElement:
        if den % self.p == 0:
            raise ValueError(f"denominator {den} is zero in F_{self.p}")
        return FpElement(self, num) / FpElement(self, den)

    @property
    def zero(self) -> FpElement:
        return FpElement(self, 0)

    @property
    def one(self) -> FpElement:
        return FpElement(self, 1)

    def format(self, x) -> str:
        return str(x.value)

    @property
    def spec_string(self) -> str:
        return f"Fp:{self.p}"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_string(spec: str) -> Field:
    """Build a field from its string form, ``"Q"`` or ``"Fp:<prime>"``."""
    if spec == "Q":
        return QQ
    if isinstance(spec, str) and spec.startswith("Fp:"):
        tail = spec[3:]
        if not tail.isdigit():
            raise ValueError(f"malformed field spec {spec!r}")
        return PrimeField(int(tail))
    raise ValueError(f"unknown field spec {spec!r}")


def zero_vector(field: Field, n: int) -> tuple:
    return (field.zero,) * n


def vadd(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatchError("vector lengths differ")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v) -> tuple:
    if len(u) != len(v):
        raise DimensionMismatchError("vector lengths differ")
    return tuple(a - b for a, b in zip(u, v))


def vneg(u) -> tuple:
    return tuple(-a for a in u)


def vscale(c, u) -> tuple:
    return tuple(c * a for a in u)


def is_zero_vector(u) -> bool:
    return not any(u)


class Matrix:
    """An immutable dense matrix over an exact field.

    Entries are stored as a tuple of row tuples; every operation returns a
    new matrix.  Empty shapes (0 x n, n x 0) are legal and behave as the
    corresponding zero objects.
    """

    __slots__ = ("field", "nrows", "ncols", "entries", "_rref")

    def __init__(self, field: Field, entries, nrows: int | None = None, ncols: int | None = None):
        rows = tuple(tuple(field(x) for x in row) for row in entries)
        if nrows is None:
            nrows = len(rows)
        elif len(rows) != nrows:
            raise DimensionMismatchError(f"expected {nrows} rows, got {len(rows)}")
        if ncols is None:
            if not rows:
                raise DimensionMismatchError("column count of an empty matrix must be given")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise DimensionMismatchError("ragged rows")
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.entries = rows
        self._rref = None

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        row = (field.zero,) * ncols
        return cls(field, (row,) * nrows, nrows=nrows, ncols=ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(
            field,
            tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)),
            nrows=n,
            ncols=n,
        )

    @classmethod
    def from_columns(cls, field: Field, columns, nrows: int) -> "Matrix":
        columns = [tuple(col) for col in columns]
        for col in columns:
            if len(col) != nrows:
                raise DimensionMismatchError("column length mismatch")
        rows = tuple(tuple(col[i] for col in columns) for i in range(nrows))
        return cls(field, rows, nrows=nrows, ncols=len(columns))

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            tuple(tuple(self.entries[i][j] for i in range(self.nrows)) for j in range(self.ncols)),
            nrows=self.ncols,
            ncols=self.nrows,
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if other.nrows != self.nrows:
            raise DimensionMismatchError("row counts differ")
        rows = tuple(a + b for a, b in zip(self.entries, other.entries))
        return Matrix(self.field, rows, nrows=self.nrows, ncols=self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if other.ncols != self.ncols:
            raise DimensionMismatchError("column counts differ")
        return Matrix(self.field, self.entries + other.entries,
                      nrows=self.nrows + other.nrows, ncols=self.ncols)

    def is_zero(self) -> bool:
        return all(not x for row in self.entries for x in row)

    def _check_field(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatchError("matrices over different fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.field, self.nrows, self.ncols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(self.field.format(x) for x in row) for row in self.entries)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise DimensionMismatchError("shapes differ")
        rows = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        return Matrix(self.field, rows, nrows=self.nrows, ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise DimensionMismatchError("shapes differ")
        rows = tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries))
        return Matrix(self.field, rows, nrows=self.nrows, ncols=self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, tuple(tuple(-x for x in row) for row in self.entries),
                      nrows=self.nrows, ncols=self.ncols)

    def scaled(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix(self.field, tuple(tuple(c * x for x in row) for row in self.entries),
                      nrows=self.nrows, ncols=self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scaled(other)
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        zero = self.field.zero
        out = [[zero] * other.ncols for _ in range(self.nrows)]
        # inner loop skips zero entries; coboundary matrices are sparse
        for k in range(self.ncols):
            brow = other.entries[k]
            bnz = [(j, v) for j, v in enumerate(brow) if v]
            if not bnz:
                continue
            for i in range(self.nrows):
                a = self.entries[i][k]
                if not a:
                    continue
                row = out[i]
                for j, v in bnz:
                    row[j] = row[j] + a * v
        return Matrix(self.field, out, nrows=self.nrows, ncols=other.ncols)

    def __rmul__(self, other):
        return self.scaled(other)

    def apply(self, vec) -> tuple:
        """Multiply this matrix with a coordinate column, returning a tuple."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError(f"expected length {self.ncols}, got {len(vec)}")
        out = [self.field.zero] * self.nrows
        for j, x in enumerate(vec):
            if x:
                for i in range(self.nrows):
                    a = self.entries[i][j]
                    if a:
                        out[i] = out[i] + a * x
        return tuple(out)

    def rref(self):
        """Reduced row echelon form and its pivot columns (both cached).

        Pivots are chosen lexicographically: the earliest column with a
        nonzero entry at or below the current row, then the earliest such
        row.  This makes the result canonical for the matrix.
        """
        if self._rref is not None:
            return self._rref
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.ncols):
            if r == self.nrows:
                break
            piv = next((i for i in range(r, self.nrows) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = self.field.one / rows[r][c]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(self.nrows):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    prow = rows[r]
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
            pivots.append(c)
            r += 1
        result = (
            Matrix(self.field, rows, nrows=self.nrows, ncols=self.ncols),
            tuple(pivots),
        )
        self._rref = result
        return result

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list:
        """Basis of the right null space, one vector per free column.

        Each vector carries entry 1 at its free column and 0 at every other
        free column; vectors are ordered by ascending free column, so the
        result is canonical.  Empty list when the kernel is zero.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        zero, one = self.field.zero, self.field.one
        for f in range(self.ncols):
            if f in pivot_set:
                continue
            v = [zero] * self.ncols
            v[f] = one
            for r, p in enumerate(pivots):
                v[p] = -reduced.entries[r][f]
            basis.append(tuple(v))
        return basis

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def solve(self, b):
        """One particular solution of ``self * x = b``, or None.

        Free variables are set to zero under the pivot ordering, so the
        returned solution is canonical.
        """
        if len(b) != self.nrows:
            raise DimensionMismatchError(f"expected length {self.nrows}, got {len(b)}")
        b = [self.field(x) for x in b]
        aug = Matrix(
            self.field,
            tuple(row + (bi,) for row, bi in zip(self.entries, b)),
            nrows=self.nrows,
            ncols=self.ncols + 1,
        )
        reduced, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [self.field.zero] * self.ncols
        for r, p in enumerate(pivots):
            x[p] = reduced.entries[r][self.ncols]
        return tuple(x)


@dataclass(frozen=True)
class LinearMap:
    """A linear map stored as its (target x source) matrix on coordinates."""

    matrix: Matrix

    @property
    def source_dim(self) -> int:
        return self.matrix.ncols

    @property
    def target_dim(self) -> int:
        return self.matrix.nrows

    def __call__(self, vec) -> tuple:
        return self.matrix.apply(vec)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        return LinearMap(self.matrix * inner.matrix)

    @staticmethod
    def identity(field: Field, n: int) -> "LinearMap":
        return LinearMap(Matrix.identity(field, n))


def echelon_rows(field: Field, vectors, length: int):
    """Canonical reduced-echelon basis for the span of the given vectors.

    Returns ``(rows, pivots)`` where rows are the nonzero RREF rows.
    """
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != length:
            raise DimensionMismatchError("vector length mismatch")
    if not vectors:
        return (), ()
    m = Matrix(field, vectors, nrows=len(vectors), ncols=length)
    reduced, pivots = m.rref()
    return reduced.entries[: len(pivots)], pivots


def reduce_mod_span(vec, rows, pivots) -> tuple:
    """Clear the pivot coordinates of ``vec`` against an RREF row basis."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return tuple(v)


def span_contains(vec, rows, pivots) -> bool:
    return is_zero_vector(reduce_mod_span(vec, rows, pivots))


def coordinates_in_span(vec, rows, pivots):
    """Coordinates of ``vec`` in an RREF row basis, or None if outside."""
    coords = tuple(vec[p] for p in pivots)
    residual = list(vec)
    for c, row in zip(coords, rows):
        if c:
            residual = [a - c * b for a, b in zip(residual, row)]
    if any(residual):
        return None
    return coords
