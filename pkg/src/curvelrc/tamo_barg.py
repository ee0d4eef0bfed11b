"""RS-like optimal LRC codes from good polynomials on subgroup cosets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .galois import (
    FieldError,
    FiniteField,
    Poly,
    additive_cosets,
    is_additive_subgroup,
    mult_subgroup_cosets,
)
from .lrc_core import (
    CodeError,
    EvaluationCodeSpec,
    LinearCode,
    Partition,
    RecoveringStructure,
    build_generator,
)


@dataclass(frozen=True)
class GoodPolynomial:
    """A degree ``r+1`` polynomial constant on each part of a point partition."""

    g: Poly
    partition: tuple[tuple[int, ...], ...]
    constants: tuple[int, ...]

    @property
    def field(self) -> FiniteField:
        return self.g.field

    @property
    def r(self) -> int:
        return len(self.partition[0]) - 1


def _checked(g: Poly, parts: list[list[int]]) -> GoodPolynomial:
    flat = [x for p in parts for x in p]
    if len(set(flat)) != len(flat):
        raise CodeError("coset representatives repeat a coset")
    constants = []
    for part in parts:
        vals = {g(x) for x in part}
        if len(vals) != 1:
            raise CodeError(f"g is not constant on {part}")
        constants.append(vals.pop())
    return GoodPolynomial(g, tuple(tuple(p) for p in parts), tuple(constants))


def good_poly_multiplicative(
    field: FiniteField, r: int, coset_reps: Sequence[int], annihilator: bool = False
) -> GoodPolynomial:
    """``g = x^(r+1)`` on cosets of the order-``(r+1)`` multiplicative subgroup.

    ``annihilator=True`` uses ``x^(r+1) - 1`` instead; both give the same code.
    """
    if r < 1:
        raise CodeError("locality r must be >= 1")
    try:
        parts = mult_subgroup_cosets(field, r + 1, coset_reps)
    except FieldError as exc:
        raise CodeError(str(exc)) from None
    coeffs = [0] * (r + 2)
    coeffs[-1] = 1
    if annihilator:
        coeffs[0] = field.neg(1)
    return _checked(Poly(field, coeffs), parts)


def good_poly_additive(
    field: FiniteField, subgroup: Sequence[int], coset_reps: Sequence[int]
) -> GoodPolynomial:
    """``g = prod_{b in H} (x - b)`` on additive cosets of ``H``."""
    if not is_additive_subgroup(field, subgroup):
        raise CodeError("elements do not form an additive subgroup")
    if len(set(subgroup)) < 2:
        raise CodeError("locality r must be >= 1")
    g = Poly(field, [1])
    for b in subgroup:
        g = g * Poly(field, [field.neg(b), 1])
    return _checked(g, additive_cosets(field, subgroup, coset_reps))


def tb_spec(gp: GoodPolynomial, k: int) -> EvaluationCodeSpec:
    F = gp.field
    r = gp.r
    if k < 1 or k % r:
        raise CodeError(f"r={r} must divide k={k}")
    m = k // r
    if m > len(set(gp.constants)):
        raise CodeError(f"k/r={m} exceeds the number of distinct values of g")

    # by first point rather than by g's value, so the order survives renormalizing g
    order = sorted(range(len(gp.partition)), key=lambda i: min(map(F.rank, gp.partition[i])))
    fibers, xval, labels = [], [], []
    for idx in order:
        pts = sorted(gp.partition[idx], key=F.rank)
        fibers.append(tuple(range(len(xval), len(xval) + len(pts))))
        xval.extend(pts)
        labels.extend((x,) for x in pts)
    consts = np.array([gp.constants[i] for i in order], dtype=np.int64)
    basis = np.array([F.pow_arr(consts, j) for j in range(m)], dtype=np.int64)
    names = tuple("1" if j == 0 else ("g" if j == 1 else f"g^{j}") for j in range(m))
    structure = RecoveringStructure(len(xval), (Partition(tuple(fibers), tuple(xval)),))
    return EvaluationCodeSpec(
        F, structure, basis, r=r, t=m - 1, h=1, basis_names=names, fiber_var="x",
        labels=tuple(labels),
    )


def tb_code(gp: GoodPolynomial, k: int) -> LinearCode:
    """The ``(n, k, r)`` code spanned by ``g^j x^i``; meets ``d = n - k - k/r + 2``."""
    spec = tb_spec(gp, k)
    return build_generator(spec, family="tamo-barg", params={"g": list(gp.g.coeffs)})
