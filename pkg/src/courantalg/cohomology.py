"""The cochain complex of an algebra with two-action coefficients.

Degree-n cochains are dense tables over basis tuples, enumerated
lexicographically with the coefficient index fastest.  The coboundary has
three groups of terms: left actions with alternating signs over the first
n slots, a single right-action term on the last slot with sign (-1)^(n+1),
and bracket substitutions with sign (-1)^i that remove slot i and place
[X_i, X_j] where X_j stood.  The n = 0 specialization is m -> -[m, X].

``coboundary`` evaluates the formula tuple by tuple, while
``coboundary_matrix`` assembles the same operator by scattering matrix
blocks; the two paths are independent enough that their agreement is a
meaningful check, and the complex property (applying the matrix twice
gives zero) pins the sign conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import (
    DimensionMismatchError,
    InvalidRepresentationError,
    NotACocycleError,
)
from .linalg import Matrix, echelon_rows, reduce_mod_span, zero_vector
from .algebra import Representation, actions_equal

DEFAULT_MAX_DEGREE = 4


def tuple_index(g: int, tup) -> int:
    """Position of a basis tuple in the lexicographic enumeration."""
    k = 0
    for s in tup:
        k = k * g + s
    return k


@dataclass(frozen=True, eq=False)
class Cochain:
    """A multilinear map from n-fold algebra tuples to the coefficients.

    ``values[tuple_index(g, t)]`` is the coefficient vector at the basis
    tuple t; for degree 0 there is a single entry at the empty tuple.
    Equality is coordinate-level: two cochains are equal when they have
    the same degree, the same value tables and representations that agree
    as action-matrix tuples (coefficient names do not enter).
    """

    rep: Representation
    degree: int
    values: tuple

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.values == other.values
            and actions_equal(self.rep, other.rep)
        )

    def __hash__(self) -> int:
        return hash((self.degree, self.values))

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be nonnegative")
        g, h = self.rep.algebra.dim, self.rep.dim
        expected = g**self.degree
        values = tuple(tuple(self.rep.field(x) for x in row) for row in self.values)
        if len(values) != expected:
            raise DimensionMismatchError(
                f"expected {expected} value rows, got {len(values)}"
            )
        if any(len(row) != h for row in values):
            raise DimensionMismatchError("each value must have the coefficient dimension")
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(cls, rep: Representation, degree: int) -> "Cochain":
        g = rep.algebra.dim
        row = zero_vector(rep.field, rep.dim)
        return cls(rep, degree, (row,) * (g**degree))

    @classmethod
    def from_entries(cls, rep: Representation, degree: int, entries) -> "Cochain":
        """Build from a sparse map {basis index tuple: coefficient vector}."""
        g = rep.algebra.dim
        table = [list(zero_vector(rep.field, rep.dim)) for _ in range(g**degree)]
        for tup, vec in entries.items():
            table[tuple_index(g, tup)] = list(vec)
        return cls(rep, degree, tuple(tuple(row) for row in table))

    @classmethod
    def unflatten(cls, rep: Representation, degree: int, flat) -> "Cochain":
        g, h = rep.algebra.dim, rep.dim
        if len(flat) != h * g**degree:
            raise DimensionMismatchError("flattened length mismatch")
        rows = tuple(tuple(flat[t * h : (t + 1) * h]) for t in range(g**degree))
        return cls(rep, degree, rows)

    def value(self, tup) -> tuple:
        return self.values[tuple_index(self.rep.algebra.dim, tup)]

    def flatten(self) -> tuple:
        return tuple(x for row in self.values for x in row)

    def is_zero(self) -> bool:
        return all(not x for row in self.values for x in row)

    def _check_compatible(self, other: "Cochain"):
        if self.degree != other.degree or not actions_equal(self.rep, other.rep):
            raise DimensionMismatchError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        rows = tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)
        )
        return Cochain(self.rep, self.degree, rows)

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        rows = tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.values, other.values)
        )
        return Cochain(self.rep, self.degree, rows)

    def __neg__(self) -> "Cochain":
        return Cochain(
            self.rep, self.degree, tuple(tuple(-x for x in row) for row in self.values)
        )

    def scaled(self, c) -> "Cochain":
        c = self.rep.field(c)
        return Cochain(
            self.rep, self.degree, tuple(tuple(c * x for x in row) for row in self.values)
        )


def _require_valid(rep: Representation):
    if not rep.is_valid:
        tag, pair, _ = rep.report.violations[0]
        raise InvalidRepresentationError(f"representation axiom {tag} fails at pair {pair}")


def coboundary(psi: Cochain) -> Cochain:
    """The degree-(n+1) coboundary of psi, evaluated on every basis tuple."""
    rep = psi.rep
    _require_valid(rep)
    alg = rep.algebra
    g, h = alg.dim, rep.dim
    n = psi.degree
    out = []
    for T in product(range(g), repeat=n + 1):
        acc = list(zero_vector(rep.field, h))

        def accumulate(vec, positive):
            for a in range(h):
                if vec[a]:
                    acc[a] = acc[a] + vec[a] if positive else acc[a] - vec[a]

        for i in range(n):
            v = psi.value(T[:i] + T[i + 1 :])
            accumulate(rep.left_action[T[i]].apply(v), i % 2 == 0)
        accumulate(rep.right_action[T[n]].apply(psi.value(T[:n])), (n + 1) % 2 == 0)
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                cell = alg.table[T[i]][T[j]]
                for k in range(g):
                    w = cell[k]
                    if w:
                        v = psi.value(T[:i] + T[i + 1 : j] + (k,) + T[j + 1 :])
                        for a in range(h):
                            if v[a]:
                                term = w * v[a]
                                acc[a] = acc[a] - term if i % 2 == 0 else acc[a] + term
        out.append(tuple(acc))
    return Cochain(rep, n + 1, tuple(out))


def coboundary_matrix(
    rep: Representation, n: int, max_degree: int = DEFAULT_MAX_DEGREE
) -> Matrix:
    """Matrix of the degree-n coboundary in the dense tuple basis.

    Shape is (h * g^(n+1)) x (h * g^n); applying it to a flattened cochain
    equals flattening ``coboundary`` of that cochain.
    """
    _require_valid(rep)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n > max_degree:
        raise ValueError(f"degree {n} exceeds the configured cap {max_degree}")
    alg = rep.algebra
    g, h = alg.dim, rep.dim
    zero = rep.field.zero
    ncols = h * g**n
    data = [[zero] * ncols for _ in range(h * g ** (n + 1))]

    def add_block(row_base, col_base, matrix, positive):
        for a in range(h):
            row = data[row_base + a]
            src = matrix.entries[a]
            for b in range(h):
                v = src[b]
                if v:
                    row[col_base + b] = row[col_base + b] + v if positive else row[col_base + b] - v

    def add_diagonal(row_base, col_base, w, positive):
        for a in range(h):
            row = data[row_base + a]
            row[col_base + a] = row[col_base + a] + w if positive else row[col_base + a] - w

    for T in product(range(g), repeat=n + 1):
        row_base = tuple_index(g, T) * h
        for i in range(n):
            col_base = tuple_index(g, T[:i] + T[i + 1 :]) * h
            add_block(row_base, col_base, rep.left_action[T[i]], i % 2 == 0)
        add_block(
            row_base,
            tuple_index(g, T[:n]) * h,
            rep.right_action[T[n]],
            (n + 1) % 2 == 0,
        )
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                cell = alg.table[T[i]][T[j]]
                for k in range(g):
                    w = cell[k]
                    if w:
                        col_base = tuple_index(g, T[:i] + T[i + 1 : j] + (k,) + T[j + 1 :]) * h
                        add_diagonal(row_base, col_base, w, i % 2 != 0)
    return Matrix(rep.field, data, nrows=h * g ** (n + 1), ncols=ncols)


def is_cocycle(psi: Cochain) -> bool:
    return coboundary(psi).is_zero()


def is_coboundary(f: Cochain, max_degree: int = DEFAULT_MAX_DEGREE):
    """A cochain psi with coboundary(psi) = f, or None when there is none.

    The witness is the canonical particular solution of the linear system,
    so repeated calls return the identical cochain.
    """
    if f.degree < 1:
        raise ValueError("only positive degrees can be coboundaries")
    matrix = coboundary_matrix(f.rep, f.degree - 1, max_degree=max_degree)
    x = matrix.solve(f.flatten())
    if x is None:
        return None
    return Cochain.unflatten(f.rep, f.degree - 1, x)


def cohomologous(f: Cochain, f2: Cochain, max_degree: int = DEFAULT_MAX_DEGREE):
    """A witness psi with coboundary(psi) = f - f2, or None.

    Both inputs must be cocycles of the same degree over the same
    representation.
    """
    if f.degree != f2.degree or not actions_equal(f.rep, f2.rep):
        raise DimensionMismatchError("cochains live in different spaces")
    for name, cochain in (("first", f), ("second", f2)):
        if not is_cocycle(cochain):
            raise NotACocycleError(f"the {name} argument is not a cocycle")
    return is_coboundary(f - f2, max_degree=max_degree)


@dataclass(frozen=True)
class CohomologyReport:
    """Dimension data and canonical representatives in one degree.

    Representatives are obtained by echelon reduction of the cocycle space
    modulo the coboundary space; ``class_coordinates`` expresses any
    cocycle in this representative basis.
    """

    rep: Representation
    degree: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    representatives: tuple
    coboundary_rows: tuple
    coboundary_pivots: tuple
    representative_pivots: tuple

    def class_coordinates(self, f: Cochain) -> tuple:
        """Coordinates of the class of a cocycle in the representative basis."""
        if f.degree != self.degree or not actions_equal(f.rep, self.rep):
            raise DimensionMismatchError("cochain does not live in this cohomology space")
        if not is_cocycle(f):
            raise NotACocycleError("class coordinates are defined for cocycles only")
        reduced = reduce_mod_span(f.flatten(), self.coboundary_rows, self.coboundary_pivots)
        coords = tuple(reduced[p] for p in self.representative_pivots)
        residual = list(reduced)
        for c, r in zip(coords, self.representatives):
            if c:
                residual = [a - c * b for a, b in zip(residual, r.flatten())]
        if any(residual):
            raise AssertionError("cocycle escaped the representative span")
        return coords


def cohomology(
    rep: Representation, n: int, max_degree: int = DEFAULT_MAX_DEGREE
) -> CohomologyReport:
    """Cocycles, coboundaries and canonical representatives in degree n."""
    _require_valid(rep)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    g, h = rep.algebra.dim, rep.dim
    dim_cochains = h * g**n
    matrix = coboundary_matrix(rep, n, max_degree=max_degree)
    kernel = matrix.kernel_basis()
    cocycle_rows, _ = echelon_rows(rep.field, kernel, dim_cochains)
    if n == 0:
        boundary_rows, boundary_pivots = (), ()
    else:
        previous = coboundary_matrix(rep, n - 1, max_degree=max_degree)
        boundary_rows, boundary_pivots = echelon_rows(
            rep.field, previous.columns(), dim_cochains
        )
    reduced = [
        reduce_mod_span(z, boundary_rows, boundary_pivots) for z in cocycle_rows
    ]
    rep_rows, rep_pivots = echelon_rows(rep.field, reduced, dim_cochains)
    dim_z = len(kernel)
    dim_b = len(boundary_rows)
    if len(rep_rows) != dim_z - dim_b:
        raise AssertionError("representative count disagrees with the dimension count")
    return CohomologyReport(
        rep=rep,
        degree=n,
        dim_cochains=dim_cochains,
        dim_cocycles=dim_z,
        dim_coboundaries=dim_b,
        dim_cohomology=dim_z - dim_b,
        representatives=tuple(Cochain.unflatten(rep, n, r) for r in rep_rows),
        coboundary_rows=boundary_rows,
        coboundary_pivots=boundary_pivots,
        representative_pivots=rep_pivots,
    )
