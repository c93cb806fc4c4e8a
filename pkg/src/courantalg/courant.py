"""Courant algebras over a Lie algebra and their classification.

A Courant algebra is a left Leibniz algebra with a bracket-preserving
projection onto a Lie algebra; it is exact when the projection is onto
and its kernel brackets to zero.  An exact one is the same thing as an
abelian extension of the base: fixing a linear section splits the total
space as base + kernel, the bracket transported through that splitting is

    [(g1,h1),(g2,h2)] = ([g1,g2], [g1,h2] + [h1,g2] + f(g1,g2))

with [g,h] / [h,g] the induced left/right actions, and the twist f is a
2-cocycle whose cohomology class does not depend on the section.  The
maps here implement both directions of that dictionary together with the
degree-1 picture: kernel-fixing automorphisms correspond to 1-cocycles.

All sections and kernel bases are pivot-based, so every derived object is
canonical and runs are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BaseMismatchError,
    DimensionMismatchError,
    FieldMismatchError,
    NotACocycleError,
    NotALieModuleError,
    NotAnAutomorphismError,
    NotSurjectiveError,
    ValueOutsideKernelError,
)
from .linalg import (
    LinearMap,
    Matrix,
    echelon_rows,
    is_zero_vector,
    vsub,
    zero_vector,
)
from .algebra import (
    MAX_WITNESSES,
    AlgebraPresentation,
    Representation,
    actions_equal,
    check_algebra,
    leibniz_kernel,
    quotient_algebra,
)
from .cohomology import (
    Cochain,
    CohomologyReport,
    coboundary,
    coboundary_matrix,
    cohomology,
    is_coboundary,
    is_cocycle,
)


@dataclass(frozen=True)
class CourantAlgebra:
    """A Leibniz algebra with a bracket-preserving projection onto a Lie base."""

    total: AlgebraPresentation
    base: AlgebraPresentation
    projection: LinearMap

    def __post_init__(self):
        if self.total.field != self.base.field:
            raise FieldMismatchError("total and base must share a field")
        if (
            self.projection.source_dim != self.total.dim
            or self.projection.target_dim != self.base.dim
        ):
            raise DimensionMismatchError("projection shape must be base dim x total dim")

    @property
    def field(self):
        return self.total.field


@dataclass(frozen=True)
class CourantReport:
    """Outcome of the two defining conditions, with witness tuples."""

    leibniz_left: bool
    projection_homomorphism: bool
    leibniz_violations: tuple
    homomorphism_violations: tuple

    @property
    def valid(self) -> bool:
        return self.leibniz_left and self.projection_homomorphism


def check_courant(c: CourantAlgebra) -> CourantReport:
    """Verify the Leibniz identity of the total bracket and that the
    projection is a bracket homomorphism, on all basis tuples."""
    kind = check_algebra(c.total)
    pi = c.projection
    hom_violations = []
    for i in range(c.total.dim):
        for j in range(c.total.dim):
            lhs = pi(c.total.table[i][j])
            rhs = c.base.bracket(pi.matrix.column(i), pi.matrix.column(j))
            res = vsub(lhs, rhs)
            if not is_zero_vector(res) and len(hom_violations) < MAX_WITNESSES:
                hom_violations.append(((i, j), res))
    return CourantReport(
        leibniz_left=kind.leibniz_left,
        projection_homomorphism=not hom_violations,
        leibniz_violations=kind.leibniz_violations,
        homomorphism_violations=tuple(hom_violations),
    )


def kernel_basis(c: CourantAlgebra) -> list:
    """Canonical basis of ker(projection) inside the total space."""
    return c.projection.matrix.kernel_basis()


def is_exact(c: CourantAlgebra) -> bool:
    """Projection onto, and the kernel brackets to zero."""
    if c.projection.matrix.rank() != c.base.dim:
        return False
    kernel = kernel_basis(c)
    for u in kernel:
        for v in kernel:
            if not is_zero_vector(c.total.bracket(u, v)):
                return False
    return True


@dataclass(frozen=True)
class Section:
    """A linear right inverse of the projection."""

    map: LinearMap


def choose_section(c: CourantAlgebra) -> Section:
    """The pivot-based section: each base basis vector is lifted to the
    canonical particular preimage (free coordinates zero)."""
    columns = []
    for i in range(c.base.dim):
        target = c.base.basis_vector(i)
        x = c.projection.matrix.solve(target)
        if x is None:
            raise NotSurjectiveError(
                f"base element {c.base.basis_names[i]!r} has no preimage"
            )
        columns.append(x)
    return Section(LinearMap(Matrix.from_columns(c.field, columns, c.total.dim)))


def _require_section(c: CourantAlgebra, q: Section):
    composed = c.projection.matrix * q.map.matrix
    if composed != Matrix.identity(c.field, c.base.dim):
        raise ValueError("the given map is not a section of the projection")


def _kernel_coordinates(c: CourantAlgebra, kmatrix: Matrix, vec) -> tuple:
    coords = kmatrix.solve(vec)
    if coords is None:
        raise ValueOutsideKernelError("vector does not lie in the projection kernel")
    return coords


def _kernel_names(h: int) -> tuple:
    return tuple(f"h{i + 1}" for i in range(h))


def induced_actions(c: CourantAlgebra) -> Representation:
    """The base acting on ker(projection) through arbitrary preimages.

    Preimages are taken with the canonical section; for an exact algebra
    the result does not depend on that choice because the kernel brackets
    to zero.
    """
    q = choose_section(c)
    kernel = kernel_basis(c)
    h = len(kernel)
    kmatrix = Matrix.from_columns(c.field, kernel, c.total.dim)
    left, right = [], []
    for i in range(c.base.dim):
        lift = q.map.matrix.column(i)
        lcols = [
            _kernel_coordinates(c, kmatrix, c.total.bracket(lift, k)) for k in kernel
        ]
        rcols = [
            _kernel_coordinates(c, kmatrix, c.total.bracket(k, lift)) for k in kernel
        ]
        left.append(Matrix.from_columns(c.field, lcols, h))
        right.append(Matrix.from_columns(c.field, rcols, h))
    return Representation(c.base, _kernel_names(h), tuple(left), tuple(right))


@dataclass(frozen=True)
class ExactCourantPresentation:
    """Split form of an exact Courant algebra: base, coefficients, twist."""

    base: AlgebraPresentation
    coefficients: Representation
    twisting_cocycle: Cochain

    def __post_init__(self):
        if self.coefficients.algebra != self.base:
            raise BaseMismatchError("coefficients must be a representation of the base")
        if self.twisting_cocycle.degree != 2 or not actions_equal(
            self.twisting_cocycle.rep, self.coefficients
        ):
            raise DimensionMismatchError("the twist must be a degree-2 cochain over the coefficients")

    def as_courant(self) -> CourantAlgebra:
        """Realize the split data as a concrete Courant algebra.

        Total basis names are the base names prefixed ``g_`` followed by
        the coefficient names prefixed ``h_``; the projection is the first
        block projection.
        """
        base = self.base
        rep = self.coefficients
        f = self.twisting_cocycle
        field = base.field
        g, h = base.dim, rep.dim
        dim = g + h
        names = tuple(f"g_{n}" for n in base.basis_names) + tuple(
            f"h_{n}" for n in rep.basis_names
        )
        zero_h = zero_vector(field, h)
        zero_g = zero_vector(field, g)
        table = []
        for i in range(dim):
            row = []
            for j in range(dim):
                if i < g and j < g:
                    row.append(base.table[i][j] + f.value((i, j)))
                elif i < g:
                    row.append(zero_g + rep.left_action[i].column(j - g))
                elif j < g:
                    row.append(zero_g + rep.right_action[j].column(i - g))
                else:
                    row.append(zero_g + zero_h)
            table.append(tuple(row))
        total = AlgebraPresentation(field, names, tuple(table))
        proj = Matrix.identity(field, g).hstack(Matrix.zeros(field, g, h))
        return CourantAlgebra(total=total, base=base, projection=LinearMap(proj))


def from_cocycle(
    g: AlgebraPresentation, rep: Representation, f: Cochain
) -> ExactCourantPresentation:
    """The exact Courant algebra twisted by a 2-cocycle.

    The total bracket is ([g1,g2], [g1,h2] + [h1,g2] + f(g1,g2)); the
    Leibniz identity for it is equivalent to f being a cocycle, which is
    checked up front.
    """
    if not check_algebra(g).lie:
        raise ValueError("the base must be a Lie algebra")
    if rep.algebra != g:
        raise BaseMismatchError("the representation must act through the given base")
    if f.degree != 2 or not actions_equal(f.rep, rep):
        raise DimensionMismatchError("the twist must be a degree-2 cochain over the coefficients")
    df = coboundary(f)
    if not df.is_zero():
        triple = next(
            t
            for t in _index_tuples(g.dim, 3)
            if not is_zero_vector(df.value(t))
        )
        raise NotACocycleError(f"coboundary is nonzero at basis triple {triple}")
    return ExactCourantPresentation(base=g, coefficients=rep, twisting_cocycle=f)


def _index_tuples(g: int, n: int):
    from itertools import product

    return product(range(g), repeat=n)


def hemisemidirect(
    g: AlgebraPresentation, left_action, coefficient_names=None
) -> ExactCourantPresentation:
    """The exact Courant algebra ([g1,g2], g1.h2) of a Lie module.

    ``left_action`` is one matrix per base basis element; the right action
    is zero and the twist is zero, so this coincides with ``from_cocycle``
    on the induced representation with a vanishing twist.
    """
    if not check_algebra(g).lie:
        raise ValueError("the base must be a Lie algebra")
    left = tuple(left_action)
    if len(left) != g.dim:
        raise DimensionMismatchError("one action matrix per base basis element")
    h = left[0].nrows if left else 0
    for m in left:
        if m.nrows != h or m.ncols != h or m.field != g.field:
            raise DimensionMismatchError("action matrices must be square over the base field")
    for i in range(g.dim):
        for j in range(g.dim):
            coefficients = g.table[i][j]
            acc = Matrix.zeros(g.field, h, h)
            for cstar, m in zip(coefficients, left):
                if cstar:
                    acc = acc + m.scaled(cstar)
            if left[i] * left[j] - left[j] * left[i] != acc:
                raise NotALieModuleError(
                    f"module law fails at basis pair ({g.basis_names[i]!r}, {g.basis_names[j]!r})"
                )
    names = tuple(coefficient_names) if coefficient_names is not None else _kernel_names(h)
    zero = Matrix.zeros(g.field, h, h)
    rep = Representation(g, names, left, (zero,) * g.dim)
    return ExactCourantPresentation(
        base=g, coefficients=rep, twisting_cocycle=Cochain.zero(rep, 2)
    )


def extract_cocycle(c: CourantAlgebra, q: Section) -> Cochain:
    """The twist of a section: (g1, g2) -> [q g1, q g2] - q([g1, g2]).

    The value projects to zero, so it is expressed in the canonical kernel
    basis; the result is a 2-cocycle over the induced actions.
    """
    _require_section(c, q)
    rep = induced_actions(c)
    kernel = kernel_basis(c)
    kmatrix = Matrix.from_columns(c.field, kernel, c.total.dim)
    g = c.base.dim
    entries = {}
    for i in range(g):
        for j in range(g):
            v = vsub(
                c.total.bracket(q.map.matrix.column(i), q.map.matrix.column(j)),
                q.map(c.base.table[i][j]),
            )
            entries[(i, j)] = _kernel_coordinates(c, kmatrix, v)
    return Cochain.from_entries(rep, 2, entries)


def normalize(c: CourantAlgebra, q: Section) -> ExactCourantPresentation:
    """Split presentation of an exact Courant algebra along a section."""
    return ExactCourantPresentation(
        base=c.base,
        coefficients=induced_actions(c),
        twisting_cocycle=extract_cocycle(c, q),
    )


@dataclass(frozen=True)
class _SplitCoordinates:
    """The linear change of coordinates induced by a section: alpha sends
    x to (projection of x, kernel coordinates of x - q(projection of x))."""

    kernel_matrix: Matrix
    alpha: Matrix
    alpha_inverse: Matrix


def _split_coordinates(c: CourantAlgebra, q: Section) -> _SplitCoordinates:
    _require_section(c, q)
    kernel = kernel_basis(c)
    kmatrix = Matrix.from_columns(c.field, kernel, c.total.dim)
    dim = c.total.dim
    correction = Matrix.identity(c.field, dim) - q.map.matrix * c.projection.matrix
    bottom_cols = [
        _kernel_coordinates(c, kmatrix, correction.column(j)) for j in range(dim)
    ]
    bottom = Matrix.from_columns(c.field, bottom_cols, len(kernel))
    alpha = c.projection.matrix.vstack(bottom)
    alpha_inverse = q.map.matrix.hstack(kmatrix)
    if alpha * alpha_inverse != Matrix.identity(c.field, c.base.dim + len(kernel)):
        raise AssertionError("split coordinates failed to invert")
    return _SplitCoordinates(kernel_matrix=kmatrix, alpha=alpha, alpha_inverse=alpha_inverse)


@dataclass(frozen=True)
class Classification:
    """Degree-2 cohomology of the induced actions and the class of the twist."""

    cohomology: CohomologyReport
    coordinates: tuple


def classify(c: CourantAlgebra) -> Classification:
    """Express the class of the extracted twist in the canonical
    representative basis of degree-2 cohomology.  The result does not
    depend on the section used for extraction."""
    rep = induced_actions(c)
    report = cohomology(rep, 2)
    phi = extract_cocycle(c, choose_section(c))
    return Classification(cohomology=report, coordinates=report.class_coordinates(phi))


@dataclass(frozen=True)
class CourantMorphism:
    """A linear map between Courant algebras over the same base that
    commutes with the projections and fixes the kernel identification."""

    map: LinearMap
    source: CourantAlgebra
    target: CourantAlgebra


def morphism_violations(m: CourantMorphism) -> tuple:
    """Check the three defining conditions on basis data.

    Returns witness records: bracket pairs where F fails to be a
    homomorphism, a flag when the projections disagree, and kernel basis
    indices that F does not carry to the matching canonical kernel vector
    of the target.
    """
    out = []
    src, tgt, F = m.source, m.target, m.map.matrix
    if F.nrows != tgt.total.dim or F.ncols != src.total.dim:
        return (("shape", (F.nrows, F.ncols)),)
    for i in range(src.total.dim):
        for j in range(src.total.dim):
            lhs = F.apply(src.total.table[i][j])
            rhs = tgt.total.bracket(F.column(i), F.column(j))
            if lhs != rhs:
                out.append(("bracket", (i, j)))
                if len(out) >= MAX_WITNESSES:
                    return tuple(out)
    if tgt.projection.matrix * F != src.projection.matrix:
        out.append(("projection", None))
    source_kernel = kernel_basis(src)
    target_kernel = kernel_basis(tgt)
    if len(source_kernel) != len(target_kernel):
        out.append(("kernel-dimension", (len(source_kernel), len(target_kernel))))
    else:
        for idx, (u, v) in enumerate(zip(source_kernel, target_kernel)):
            if F.apply(u) != tuple(v):
                out.append(("kernel", idx))
                if len(out) >= MAX_WITNESSES:
                    return tuple(out)
    return tuple(out)


def _shift_matrix(c_field, g: int, psi: Cochain) -> Matrix:
    """Block matrix of (g, h) -> (g, h + psi(g)) in split coordinates."""
    h = psi.rep.dim
    psi_cols = [psi.value((i,)) for i in range(g)]
    psi_matrix = Matrix.from_columns(c_field, psi_cols, h)
    top = Matrix.identity(c_field, g).hstack(Matrix.zeros(c_field, g, h))
    bottom = psi_matrix.hstack(Matrix.identity(c_field, h))
    return top.vstack(bottom)


@dataclass(frozen=True)
class IsomorphismVerdict:
    """Either a verified isomorphism or the reason none exists.

    ``kernel_shift`` is the 1-cochain realizing the witness in split
    coordinates, kept alongside the matrix so it can be re-verified
    externally.
    """

    morphism: CourantMorphism | None
    reason: str | None
    kernel_shift: Cochain | None = None

    @property
    def isomorphic(self) -> bool:
        return self.morphism is not None


REASON_DIFFERENT_REPRESENTATIONS = "different-representations"
REASON_DISTINCT_CLASSES = "distinct-classes"


def are_isomorphic(c1: CourantAlgebra, c2: CourantAlgebra) -> IsomorphismVerdict:
    """Decide isomorphism of two exact Courant algebras over one base.

    The comparison fixes the kernel identification pointwise, so it first
    requires the induced actions to agree as matrix tuples; the remaining
    freedom is a kernel shift by a 1-cochain psi, which works exactly when
    the twist classes agree, i.e. when the coboundary equation for the
    twist difference is solvable.
    """
    if c1.base != c2.base:
        raise BaseMismatchError("the two algebras live over different bases")
    rep1 = induced_actions(c1)
    rep2 = induced_actions(c2)
    if not actions_equal(rep1, rep2):
        return IsomorphismVerdict(None, REASON_DIFFERENT_REPRESENTATIONS)
    q1 = choose_section(c1)
    q2 = choose_section(c2)
    phi1 = extract_cocycle(c1, q1)
    phi2 = extract_cocycle(c2, q2)
    psi = is_coboundary(phi1 - phi2)
    if psi is None:
        return IsomorphismVerdict(None, REASON_DISTINCT_CLASSES)
    split1 = _split_coordinates(c1, q1)
    split2 = _split_coordinates(c2, q2)
    shift = _shift_matrix(c1.field, c1.base.dim, psi)
    F = split2.alpha_inverse * shift * split1.alpha
    morphism = CourantMorphism(map=LinearMap(F), source=c1, target=c2)
    bad = morphism_violations(morphism)
    if bad:
        raise AssertionError(f"constructed witness fails its own checks: {bad[0]}")
    return IsomorphismVerdict(morphism, None, psi)


def automorphism_from_cocycle(
    c: CourantAlgebra, psi: Cochain, q: Section
) -> CourantMorphism:
    """The automorphism that fixes the kernel and shifts by a 1-cocycle.

    In the split coordinates of the section the map is
    (g, h) -> (g, h + psi(g)).
    """
    rep = induced_actions(c)
    if psi.degree != 1 or not actions_equal(psi.rep, rep):
        raise DimensionMismatchError(
            "the shift must be a degree-1 cochain over the induced actions"
        )
    if not is_cocycle(psi):
        raise NotACocycleError("the shift cochain is not a 1-cocycle")
    split = _split_coordinates(c, q)
    F = split.alpha_inverse * _shift_matrix(c.field, c.base.dim, psi) * split.alpha
    morphism = CourantMorphism(map=LinearMap(F), source=c, target=c)
    bad = morphism_violations(morphism)
    if bad:
        raise AssertionError(f"constructed automorphism fails its own checks: {bad[0]}")
    return morphism


def cocycle_from_automorphism(
    c: CourantAlgebra, F: CourantMorphism, q: Section
) -> Cochain:
    """Recover the kernel shift of an automorphism: the kernel component
    of F(q(g)) in split coordinates.  Inverts ``automorphism_from_cocycle``."""
    if F.source != c or F.target != c:
        raise NotAnAutomorphismError("the morphism is not attached to this algebra")
    bad = morphism_violations(F)
    if bad:
        raise NotAnAutomorphismError(f"morphism condition fails: {bad[0]}")
    _require_section(c, q)
    rep = induced_actions(c)
    kernel = kernel_basis(c)
    kmatrix = Matrix.from_columns(c.field, kernel, c.total.dim)
    entries = {}
    for i in range(c.base.dim):
        lift = q.map.matrix.column(i)
        shift = vsub(F.map(lift), lift)
        entries[(i,)] = _kernel_coordinates(c, kmatrix, shift)
    psi = Cochain.from_entries(rep, 1, entries)
    if not is_cocycle(psi):
        raise AssertionError("extracted shift is not a cocycle")
    return psi


@dataclass(frozen=True)
class AutomorphismSpace:
    """Degree-1 dimension data for the kernel-fixing automorphisms.

    Every basis cochain exponentiates to a distinct automorphism, and
    composition of automorphisms adds the cochains.
    """

    dim_cocycles: int
    dim_coboundaries: int
    dim_cohomology: int
    basis: tuple


def automorphism_space(c: CourantAlgebra) -> AutomorphismSpace:
    rep = induced_actions(c)
    report = cohomology(rep, 1)
    kernel = coboundary_matrix(rep, 1).kernel_basis()
    rows, _ = echelon_rows(rep.field, kernel, rep.dim * rep.algebra.dim)
    basis = tuple(Cochain.unflatten(rep, 1, r) for r in rows)
    return AutomorphismSpace(
        dim_cocycles=report.dim_cocycles,
        dim_coboundaries=report.dim_coboundaries,
        dim_cohomology=report.dim_cohomology,
        basis=basis,
    )


def characteristic_class(a: AlgebraPresentation):
    """Classify a Leibniz algebra as an extension of its largest Lie quotient.

    Builds the quotient by the squares ideal, checks at runtime that the
    resulting projection really is exact (the ideal is abelian and
    left-central in every left Leibniz algebra), and classifies.  Returns
    the intermediate Courant algebra together with the classification.
    """
    if not check_algebra(a).leibniz_left:
        raise ValueError("the algebra must be left Leibniz")
    kernel_rows = leibniz_kernel(a)
    quotient, projection = quotient_algebra(a, kernel_rows)
    if not check_algebra(quotient).lie:
        raise AssertionError("quotient by the squares ideal is not Lie")
    c = CourantAlgebra(total=a, base=quotient, projection=projection)
    report = check_courant(c)
    if not report.valid:
        raise AssertionError("quotient projection is not a bracket homomorphism")
    if not is_exact(c):
        raise AssertionError("squares ideal failed the abelian-kernel check")
    return c, classify(c)
