"""Named example groups and reference derivations/1-forms for them."""
from __future__ import annotations

from .algebra import FiniteField, Polynomial
from .construct.slgl import slgl_generators
from .forms import MixedForm, derivation, one_form
from .group import GroupData, close_group


def _t():
    return ((1, 1), (0, 1))


def baby(p: int = 5):
    return FiniteField(p), [_t()]


def two_by_two(full: bool = False):
    """<t, s> over F_5, or <t, s, g> with the non-reflection g."""
    F = FiniteField(5)
    gens = [_t(), ((1, 0), (0, 4))]
    if full:
        gens.append(((4, 0), (0, 2)))
    return F, gens


def single_transvection(p: int = 2):
    return FiniteField(p), [_t()]


def dimension_one(p: int = 5, e: int = 2):
    F = FiniteField(p)
    zeta = F.pow(F.primitive_element(), (p - 1) // e)
    return F, [((zeta,),)]


def slgl(n: int, p: int, k: int = 1, e: int = 1):
    F = FiniteField(p, k)
    return F, slgl_generators(F, n, e)


def unipotent_gl3(full: bool = False):
    """Upper unipotent matrices in GL_3(F_3); `full` adds diag(1, -1, -1)."""
    F = FiniteField(3)
    gens = [
        ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        ((1, 0, 1), (0, 1, 0), (0, 0, 1)),
        ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
    ]
    if full:
        gens.append(((1, 0, 0), (0, 2, 0), (0, 0, 2)))
    return F, gens


def lower_block(p: int = 3):
    """The 4-dimensional group of matrices [[I, 0], [[a, c], [c, b]], I]]."""
    F = FiniteField(p)
    gens = [
        ((1, 0, 0, 0), (0, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)),
        ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 1, 0, 1)),
        ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 1, 0), (1, 1, 0, 1)),
    ]
    return F, gens


GROUPS = {
    "baby": baby,
    "two-by-two": lambda: two_by_two(False),
    "two-by-two-full": lambda: two_by_two(True),
    "transvection-f2": lambda: single_transvection(2),
    "transvection-f5": lambda: single_transvection(5),
    "dimension-one": dimension_one,
    "sl2f2": lambda: slgl(2, 2),
    "sl2f3": lambda: slgl(2, 3),
    "gl2f3": lambda: slgl(2, 3, e=2),
    "sl3f2": lambda: slgl(3, 2),
    "sl2f4": lambda: slgl(2, 2, k=2),
    "gl2f4": lambda: slgl(2, 2, k=2, e=3),
    "unipotent-gl3f3": lambda: unipotent_gl3(False),
    "unipotent-gl3f3-full": lambda: unipotent_gl3(True),
    "lower-block-f3": lambda: lower_block(3),
}


def group(name: str, **kwargs) -> GroupData:
    try:
        build = GROUPS[name]
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {', '.join(sorted(GROUPS))}") from None
    F, gens = build(**kwargs)
    return close_group(F, gens)


def _polys(F, n, rows):
    return [[Polynomial.parse(s, F, n) for s in row] for row in rows]


def unipotent_gl3_forms() -> tuple[list[MixedForm], list[MixedForm]]:
    F, n = FiniteField(3), 3
    thetas = [derivation(F, n, r) for r in _polys(F, n, [
        ["1", "0", "0"],
        ["x1", "x2", "x3"],
        ["x1^3", "x2^3", "x3^3"],
    ])]
    omegas = [one_form(F, n, r) for r in _polys(F, n, [
        ["0", "0", "1"],
        ["0", "x3", "-x2"],
        ["x2^3*x3 - x2*x3^3", "-x1^3*x3 + x1*x3^3", "x1^3*x2 - x1*x2^3"],
    ])]
    return thetas, omegas


def unipotent_gl3_invariants() -> list[Polynomial]:
    F, n = FiniteField(3), 3
    return [Polynomial.parse(s, F, n) for s in (
        "x3",
        "x2^3 - x2*x3^2",
        "x1^9 - x1^3*x2^6 - x1^3*x2^4*x3^2 - x1^3*x2^2*x3^4 - x1^3*x3^6"
        " + x1*x2^6*x3^2 + x1*x2^4*x3^4 + x1*x2^2*x3^6",
    )]


def lower_block_forms(p: int = 3) -> tuple[list[MixedForm], list[MixedForm]]:
    F, n = FiniteField(p), 4
    thetas = [derivation(F, n, r) for r in _polys(F, n, [
        ["0", "0", "1", "0"],
        ["0", "0", "0", "1"],
        ["x1", "x2", "x3", "x4"],
        [f"x1^{p}", f"x2^{p}", f"x3^{p}", f"x4^{p}"],
    ])]
    omegas = [one_form(F, n, r) for r in _polys(F, n, [
        ["1", "0", "0", "0"],
        ["0", "1", "0", "0"],
        ["x3", "x4", "-x1", "-x2"],
        [f"x3^{p}", f"x4^{p}", f"-x1^{p}", f"-x2^{p}"],
    ])]
    return thetas, omegas
