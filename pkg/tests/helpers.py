"""Shared builders for the test suite."""

from fractions import Fraction
import random

from courantalg import (
    AlgebraPresentation,
    Cochain,
    QQ,
    coboundary_matrix,
)


def aff1(field=QQ):
    return AlgebraPresentation.from_named_brackets(
        field,
        ("e1", "e2"),
        {("e1", "e2"): {"e2": 1}, ("e2", "e1"): {"e2": -1}},
    )


def leibniz2(field=QQ):
    return AlgebraPresentation.from_named_brackets(
        field, ("e1", "e2"), {("e1", "e1"): {"e2": 1}}
    )


def heisenberg3(field=QQ):
    return AlgebraPresentation.from_named_brackets(
        field,
        ("x", "y", "z"),
        {("x", "y"): {"z": 1}, ("y", "x"): {"z": -1}},
    )


def random_scalar(field, rng: random.Random):
    if field is QQ or field == QQ:
        return Fraction(rng.randint(-3, 3), rng.choice((1, 1, 2, 3)))
    return field(rng.randrange(field.characteristic))


def random_cochain(rep, degree, rng: random.Random) -> Cochain:
    g, h = rep.algebra.dim, rep.dim
    rows = tuple(
        tuple(random_scalar(rep.field, rng) for _ in range(h)) for _ in range(g**degree)
    )
    return Cochain(rep, degree, rows)


def random_cocycle(rep, degree, rng: random.Random, kernel=None) -> Cochain:
    """A random element of the cocycle space, via its kernel basis."""
    if kernel is None:
        kernel = coboundary_matrix(rep, degree).kernel_basis()
    g, h = rep.algebra.dim, rep.dim
    flat = [rep.field.zero] * (h * g**degree)
    for vec in kernel:
        c = random_scalar(rep.field, rng)
        if c:
            flat = [a + c * b for a, b in zip(flat, vec)]
    return Cochain.unflatten(rep, degree, tuple(flat))
