"""Structure-constant presentations of Leibniz and Lie algebras.

A bracket on a finite-dimensional space is stored as the table of
coordinate vectors ``table[i][j]`` = bracket of basis i with basis j.  The
bracket convention throughout is the left one: every left multiplication
acts as a derivation, i.e. [x,[y,z]] = [[x,y],z] + [y,[x,z]].  All checks
run on basis tuples only; bilinearity extends them to the whole space.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DimensionMismatchError,
    FieldMismatchError,
    NotADifferentialError,
    NotAnIdealError,
)
from .linalg import (
    Field,
    LinearMap,
    Matrix,
    echelon_rows,
    is_zero_vector,
    reduce_mod_span,
    span_contains,
    vadd,
    vsub,
    zero_vector,
)

MAX_WITNESSES = 16


@dataclass(frozen=True)
class AlgebraKindReport:
    """What the bracket of a presentation turned out to be.

    ``leibniz_violations`` holds up to MAX_WITNESSES failing basis triples
    with the residual [x,[y,z]] - [[x,y],z] - [y,[x,z]];
    ``antisymmetry_violations`` holds failing pairs with [x,y] + [y,x].
    """

    leibniz_left: bool
    antisymmetric: bool
    leibniz_violations: tuple
    antisymmetry_violations: tuple

    @property
    def lie(self) -> bool:
        return self.leibniz_left and self.antisymmetric

    @property
    def violations(self) -> tuple:
        return self.leibniz_violations


@dataclass(frozen=True)
class AlgebraPresentation:
    """A finite-dimensional bilinear bracket given by structure constants."""

    field: Field
    basis_names: tuple
    table: tuple

    def __post_init__(self):
        names = tuple(self.basis_names)
        if len(set(names)) != len(names):
            raise ValueError("basis names must be distinct")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError("basis names must be nonempty strings")
        dim = len(names)
        table = tuple(
            tuple(tuple(self.field(x) for x in cell) for cell in row) for row in self.table
        )
        if len(table) != dim or any(
            len(row) != dim or any(len(cell) != dim for cell in row) for row in table
        ):
            raise DimensionMismatchError("structure-constant table extents must equal dim")
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "table", table)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @classmethod
    def abelian(cls, field: Field, basis_names) -> "AlgebraPresentation":
        names = tuple(basis_names)
        n = len(names)
        zero = zero_vector(field, n)
        return cls(field, names, tuple((zero,) * n for _ in range(n)))

    @classmethod
    def from_named_brackets(cls, field: Field, basis_names, brackets) -> "AlgebraPresentation":
        """Build from a sparse map {(left_name, right_name): {name: value}}."""
        names = tuple(basis_names)
        index = {n: i for i, n in enumerate(names)}
        n = len(names)
        table = [[[field.zero] * n for _ in range(n)] for _ in range(n)]
        for (ln, rn), value in brackets.items():
            i, j = index[ln], index[rn]
            for kn, v in value.items():
                table[i][j][index[kn]] = field(v)
        return cls(field, names, tuple(tuple(tuple(c) for c in row) for row in table))

    def name_index(self, name: str) -> int:
        return self.basis_names.index(name)

    def basis_vector(self, i: int) -> tuple:
        return tuple(
            self.field.one if j == i else self.field.zero for j in range(self.dim)
        )

    def bracket_basis(self, i: int, j: int) -> tuple:
        return self.table[i][j]

    def bracket(self, x, y) -> tuple:
        """Bilinear extension of the structure constants to vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("vector length must equal the algebra dimension")
        acc = [self.field.zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.table[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                cell = row[j]
                for k in range(self.dim):
                    v = cell[k]
                    if v:
                        acc[k] = acc[k] + c * v
        return tuple(acc)

    def left_multiplication(self, i: int) -> Matrix:
        """Matrix of x -> [e_i, x] on coordinates."""
        n = self.dim
        return Matrix(
            self.field,
            tuple(tuple(self.table[i][j][k] for j in range(n)) for k in range(n)),
            nrows=n,
            ncols=n,
        )

    def right_multiplication(self, i: int) -> Matrix:
        """Matrix of x -> [x, e_i] on coordinates."""
        n = self.dim
        return Matrix(
            self.field,
            tuple(tuple(self.table[j][i][k] for j in range(n)) for k in range(n)),
            nrows=n,
            ncols=n,
        )

    @cached_property
    def kind(self) -> AlgebraKindReport:
        n = self.dim
        leib = []
        antisym = []
        for i in range(n):
            for j in range(n):
                pair = vadd(self.table[i][j], self.table[j][i])
                if not is_zero_vector(pair) and len(antisym) < MAX_WITNESSES:
                    antisym.append(((i, j), pair))
                for k in range(n):
                    lhs = self.bracket(self.basis_vector(i), self.table[j][k])
                    rhs = vadd(
                        self.bracket(self.table[i][j], self.basis_vector(k)),
                        self.bracket(self.basis_vector(j), self.table[i][k]),
                    )
                    res = vsub(lhs, rhs)
                    if not is_zero_vector(res) and len(leib) < MAX_WITNESSES:
                        leib.append(((i, j, k), res))
        return AlgebraKindReport(not leib, not antisym, tuple(leib), tuple(antisym))


def check_algebra(alg: AlgebraPresentation) -> AlgebraKindReport:
    """Classify the bracket: left Leibniz, antisymmetric, hence Lie or not."""
    return alg.kind


def bracket_eval(alg: AlgebraPresentation, x, y) -> tuple:
    return alg.bracket(x, y)


@dataclass(frozen=True)
class DifferentialLieAlgebra:
    """A Lie algebra together with a square-zero bracket derivation."""

    algebra: AlgebraPresentation
    differential: LinearMap

    def violations(self) -> tuple:
        """All the ways this fails to be a differential Lie algebra."""
        alg = self.algebra
        d = self.differential
        out = []
        if d.source_dim != alg.dim or d.target_dim != alg.dim:
            return (("shape", (d.target_dim, d.source_dim)),)
        if not alg.kind.lie:
            out.append(("not-lie", None))
        dd = d.matrix * d.matrix
        if not dd.is_zero():
            j = next(j for j in range(alg.dim) if any(dd.column(j)))
            out.append(("square", j))
        for i in range(alg.dim):
            for j in range(alg.dim):
                lhs = d(alg.table[i][j])
                rhs = vadd(
                    alg.bracket(d.matrix.column(i), alg.basis_vector(j)),
                    alg.bracket(alg.basis_vector(i), d.matrix.column(j)),
                )
                if lhs != rhs:
                    out.append(("derivation", (i, j)))
                    if len(out) >= MAX_WITNESSES:
                        return tuple(out)
        return tuple(out)


def derived_bracket(dla: DifferentialLieAlgebra) -> AlgebraPresentation:
    """The bracket (x, y) -> [dx, y], always left Leibniz.

    Raises NotADifferentialError with a witness when the input is not a
    differential Lie algebra.
    """
    bad = dla.violations()
    if bad:
        kind, witness = bad[0]
        raise NotADifferentialError(f"{kind} violation at {witness!r}")
    alg = dla.algebra
    d = dla.differential
    table = tuple(
        tuple(alg.bracket(d.matrix.column(i), alg.basis_vector(j)) for j in range(alg.dim))
        for i in range(alg.dim)
    )
    return AlgebraPresentation(alg.field, alg.basis_names, table)


@dataclass(frozen=True)
class RepresentationReport:
    valid: bool
    violations: tuple  # (axiom tag, (i, j), residual matrix)


@dataclass(frozen=True)
class Representation:
    """A coefficient space with left and right actions of an algebra.

    ``left_action[i]`` is the matrix of m -> [e_i, m] and
    ``right_action[i]`` that of m -> [m, e_i], both on coordinates of the
    coefficient space.
    """

    algebra: AlgebraPresentation
    basis_names: tuple
    left_action: tuple
    right_action: tuple

    def __post_init__(self):
        names = tuple(self.basis_names)
        if len(set(names)) != len(names):
            raise ValueError("coefficient basis names must be distinct")
        if any(not isinstance(n, str) or not n for n in names):
            raise ValueError("coefficient basis names must be nonempty strings")
        h = len(names)
        left = tuple(self.left_action)
        right = tuple(self.right_action)
        if len(left) != self.algebra.dim or len(right) != self.algebra.dim:
            raise DimensionMismatchError("one action matrix per acting basis element")
        for m in left + right:
            if not isinstance(m, Matrix) or m.nrows != h or m.ncols != h:
                raise DimensionMismatchError("action matrices must be square of the coefficient dimension")
            if m.field != self.algebra.field:
                raise FieldMismatchError("action matrices must share the algebra's field")
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "left_action", left)
        object.__setattr__(self, "right_action", right)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def field(self) -> Field:
        return self.algebra.field

    def _combination(self, matrices, coeffs) -> Matrix:
        h = self.dim
        acc = Matrix.zeros(self.field, h, h)
        for c, m in zip(coeffs, matrices):
            if c:
                acc = acc + m.scaled(c)
        return acc

    def left_of(self, coeffs) -> Matrix:
        """Action matrix of the algebra element with the given coordinates."""
        return self._combination(self.left_action, coeffs)

    def right_of(self, coeffs) -> Matrix:
        return self._combination(self.right_action, coeffs)

    @cached_property
    def report(self) -> RepresentationReport:
        """Check the three compatibility axioms on all acting basis pairs.

        With L_i, R_i the action matrices and [e_i,e_j] expanded through
        the structure constants, the axioms (one per slot the coefficient
        variable occupies) read:

          z in M:  L_i L_j = L_[e_i,e_j] + L_j L_i
          y in M:  L_i R_j = R_j L_i + R_[e_i,e_j]
          x in M:  R_[e_i,e_j] = R_j R_i + L_i R_j
        """
        alg = self.algebra
        L, R = self.left_action, self.right_action
        violations = []
        for i in range(alg.dim):
            for j in range(alg.dim):
                c = alg.table[i][j]
                lc = self.left_of(c)
                rc = self.right_of(c)
                checks = (
                    ("z-in-module", L[i] * L[j] - lc - L[j] * L[i]),
                    ("y-in-module", L[i] * R[j] - R[j] * L[i] - rc),
                    ("x-in-module", rc - R[j] * R[i] - L[i] * R[j]),
                )
                for tag, residual in checks:
                    if not residual.is_zero():
                        if len(violations) < MAX_WITNESSES:
                            violations.append((tag, (i, j), residual))
        valid = not violations
        return RepresentationReport(valid, tuple(violations))

    @property
    def is_valid(self) -> bool:
        return self.report.valid


def check_representation(rep: Representation) -> RepresentationReport:
    return rep.report


def actions_equal(rep1: Representation, rep2: Representation) -> bool:
    """Coordinate-level equality: same algebra and the same action matrices.

    Coefficient basis names are display metadata and do not enter; this is
    the comparison every mathematical operation uses.
    """
    return (
        rep1.algebra == rep2.algebra
        and rep1.dim == rep2.dim
        and rep1.left_action == rep2.left_action
        and rep1.right_action == rep2.right_action
    )


def trivial_representation(alg: AlgebraPresentation, basis_names=("h1",)) -> Representation:
    names = tuple(basis_names)
    zero = Matrix.zeros(alg.field, len(names), len(names))
    return Representation(alg, names, (zero,) * alg.dim, (zero,) * alg.dim)


def self_representation(alg: AlgebraPresentation) -> Representation:
    """The algebra acting on itself by left and right multiplication."""
    left = tuple(alg.left_multiplication(i) for i in range(alg.dim))
    right = tuple(alg.right_multiplication(i) for i in range(alg.dim))
    return Representation(alg, alg.basis_names, left, right)


def leibniz_kernel(alg: AlgebraPresentation) -> tuple:
    """Canonical echelon basis of the two-sided ideal generated by squares.

    The generating set is every diagonal square [e_i,e_i] together with
    the symmetrized products [e_i,e_j] + [e_j,e_i]; over characteristic 2
    the diagonal squares are not spanned by the symmetrizations, which is
    why both families are included.  The span is then closed under left
    and right bracket multiplication until the dimension stabilizes.
    """
    n = alg.dim
    gens = []
    for i in range(n):
        gens.append(alg.table[i][i])
        for j in range(i + 1, n):
            gens.append(vadd(alg.table[i][j], alg.table[j][i]))
    gens = [g for g in gens if not is_zero_vector(g)]
    rows, pivots = echelon_rows(alg.field, gens, n)
    while True:
        fresh = []
        for v in rows:
            for i in range(n):
                e = alg.basis_vector(i)
                for w in (alg.bracket(e, v), alg.bracket(v, e)):
                    if not span_contains(w, rows, pivots):
                        fresh.append(w)
        if not fresh:
            return tuple(rows)
        rows, pivots = echelon_rows(alg.field, list(rows) + fresh, n)


def quotient_algebra(alg: AlgebraPresentation, ideal) -> tuple:
    """Quotient presentation by a two-sided ideal, with the projection.

    The quotient basis is the set of standard basis vectors at the
    non-pivot coordinates of the ideal's echelon basis; the projection
    sends a vector to its reduction mod the ideal, read off at those
    coordinates.  Raises NotAnIdealError with a witness product that
    escapes the span.
    """
    n = alg.dim
    rows, pivots = echelon_rows(alg.field, ideal, n)
    for v in rows:
        for i in range(n):
            e = alg.basis_vector(i)
            for w in (alg.bracket(e, v), alg.bracket(v, e)):
                if not span_contains(w, rows, pivots):
                    witness = tuple(alg.field.format(x) for x in w)
                    raise NotAnIdealError(
                        f"bracket with basis element {alg.basis_names[i]!r} "
                        f"escapes the span: {witness}"
                    )
    complement = [c for c in range(n) if c not in set(pivots)]
    names = tuple(alg.basis_names[c] for c in complement)

    def project(v) -> tuple:
        reduced = reduce_mod_span(v, rows, pivots)
        return tuple(reduced[c] for c in complement)

    proj_rows = []
    columns = [project(alg.basis_vector(j)) for j in range(n)]
    for r in range(len(complement)):
        proj_rows.append(tuple(col[r] for col in columns))
    projection = LinearMap(
        Matrix(alg.field, proj_rows, nrows=len(complement), ncols=n)
    )
    table = tuple(
        tuple(project(alg.bracket_basis(complement[a], complement[b])) for b in range(len(complement)))
        for a in range(len(complement))
    )
    quotient = AlgebraPresentation(alg.field, names, table)
    return quotient, projection
