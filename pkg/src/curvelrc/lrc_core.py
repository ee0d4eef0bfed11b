"""Evaluation codes built from a covering map and fiber-constant functions.

A code is described by a partition of its coordinates into fibers of equal
size ``r + 1``, a fiber coordinate value ``x(P)`` for each coordinate that is
injective on every fiber, and ``m`` functions that are constant on fibers.
The generator matrix has one row per function ``f_j * x^i`` with
``0 <= i < r`` and ``1 <= j <= m``; on each fiber a codeword is the
evaluation of a polynomial in ``x`` of degree below ``r``, which is what
makes single-erasure repair a local interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .galois import FiniteField, Poly, interpolate


class CodeError(ValueError):
    """Invalid code specification or an illegal operation on a code."""


@dataclass(frozen=True)
class Partition:
    """Recovering sets for one partition of the coordinates.

    ``xval[i]`` is the value of the fiber coordinate function at coordinate ``i``.
    """

    fibers: tuple[tuple[int, ...], ...]
    xval: tuple[int, ...]
    owner: tuple[int, ...] = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        fibers = tuple(tuple(int(i) for i in f) for f in self.fibers)
        object.__setattr__(self, "fibers", fibers)
        object.__setattr__(self, "xval", tuple(int(v) for v in self.xval))
        owner = [-1] * len(self.xval)
        for idx, fib in enumerate(fibers):
            for pos in fib:
                if not 0 <= pos < len(owner) or owner[pos] != -1:
                    raise CodeError(f"coordinate {pos} is not covered exactly once")
                owner[pos] = idx
        if -1 in owner:
            raise CodeError(f"coordinate {owner.index(-1)} lies in no fiber")
        object.__setattr__(self, "owner", tuple(owner))
        sizes = {len(f) for f in fibers}
        if len(sizes) != 1:
            raise CodeError(f"fibers have unequal sizes {sorted(sizes)}")
        for fib in fibers:
            vals = [self.xval[i] for i in fib]
            if len(set(vals)) != len(vals):
                raise CodeError(f"fiber coordinate repeats a value on fiber {fib}")

    @property
    def locality(self) -> int:
        return len(self.fibers[0]) - 1

    def fiber_of(self, pos: int) -> tuple[int, ...]:
        return self.fibers[self.owner[pos]]


@dataclass(frozen=True)
class RecoveringStructure:
    """One or two partitions of ``range(n)`` into recovering sets."""

    n: int
    partitions: tuple[Partition, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.partitions) <= 2:
            raise CodeError("a recovering structure holds one or two partitions")
        for part in self.partitions:
            if len(part.xval) != self.n:
                raise CodeError("partition length does not match n")
        if len(self.partitions) == 2:
            first, second = self.partitions
            for fib in first.fibers:
                seen = [second.owner[i] for i in fib]
                if len(set(seen)) != len(seen):
                    raise CodeError("partitions are not transversal")

    def partition(self, which: int) -> Partition:
        if not 1 <= which <= len(self.partitions):
            raise CodeError(f"no partition {which}; code has {len(self.partitions)}")
        return self.partitions[which - 1]

    @property
    def localities(self) -> tuple[int, ...]:
        return tuple(p.locality for p in self.partitions)


@dataclass(frozen=True)
class EvaluationCodeSpec:
    """Input to :func:`build_generator`.

    ``basis_values[j, s]`` is the value of the j-th fiber-constant function on
    fiber ``s`` of the first partition.  ``t``, ``ell``, ``genus_y`` and ``h``
    only feed the designed parameters.
    """

    field: FiniteField
    structure: RecoveringStructure
    basis_values: np.ndarray
    r: int
    t: int
    h: int
    ell: int = 1
    genus_y: int = 0
    basis_names: tuple[str, ...] = ()
    fiber_var: str = "x"
    labels: tuple[tuple[int, ...], ...] = ()

    @property
    def m(self) -> int:
        return int(self.basis_values.shape[0])


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FiniteField
    G: np.ndarray
    structure: RecoveringStructure
    family: str
    designed_distance: int
    params: dict = dc_field(default_factory=dict)
    labels: tuple[tuple[int, ...], ...] = ()
    row_names: tuple[str, ...] = ()

    @property
    def n(self) -> int:
        return int(self.G.shape[1])

    @property
    def k(self) -> int:
        return int(self.G.shape[0])

    @property
    def r(self) -> int:
        return self.structure.partitions[0].locality

    @property
    def localities(self) -> tuple[int, ...]:
        return self.structure.localities


def designed_params(spec: EvaluationCodeSpec) -> tuple[int, int, int]:
    """``(n, k_lower, d_lower)`` from the general distance/dimension bounds."""
    r, t, ell = spec.r, spec.t, spec.ell
    s = len(spec.structure.partitions[0].fibers)
    n = (r + 1) * s
    k_lower = r * (t * ell - spec.genus_y + 1)
    d_lower = n - t * ell * (r + 1) - (r - 1) * spec.h
    return n, k_lower, d_lower


def _monomial_name(base: str, power: int, var: str) -> str:
    x = "" if power == 0 else (var if power == 1 else f"{var}^{power}")
    if base == "1":
        return x or "1"
    return f"{x}*{base}" if x else base


def build_generator(
    spec: EvaluationCodeSpec,
    family: str = "evaluation",
    designed_distance: int | None = None,
    params: dict | None = None,
) -> LinearCode:
    """Evaluate ``f_j * x^i`` on every coordinate; rows are ``i``-major.

    Raises CodeError when the designed distance is below 1 or the rows turn
    out to be linearly dependent.
    """
    from .analysis import rank

    F = spec.field
    part = spec.structure.partitions[0]
    r = spec.r
    if part.locality != r:
        raise CodeError(f"fiber size {part.locality + 1} does not match r={r}")
    if spec.basis_values.shape[1] != len(part.fibers):
        raise CodeError("basis_values must have one column per fiber")
    n, _, d_lower = designed_params(spec)
    if n != spec.structure.n:
        raise CodeError("structure length disagrees with (r+1)*s")
    if designed_distance is None:
        designed_distance = d_lower
    if designed_distance < 1:
        raise CodeError(f"designed distance {designed_distance} < 1; reduce t")

    xval = np.array(part.xval, dtype=np.int64)
    owner = np.array(part.owner, dtype=np.int64)
    bv = np.asarray(spec.basis_values, dtype=np.int64)
    rows = []
    names = []
    for i in range(r):
        xi = F.pow_arr(xval, i)
        for j in range(spec.m):
            rows.append(F.mul_arr(bv[j, owner], xi))
            base = spec.basis_names[j] if spec.basis_names else f"f{j + 1}"
            names.append(_monomial_name(base, i, spec.fiber_var))
    G = np.array(rows, dtype=np.int64).reshape(len(rows), n)
    k = r * spec.m
    if k > n:
        raise CodeError(f"dimension {k} exceeds length {n}")
    if rank(F, G) != k:
        raise CodeError("generator rows are linearly dependent")
    G.setflags(write=False)
    info = {"n": n, "k": k, "r": list(spec.structure.localities), "t": spec.t, "h": spec.h,
            "ell": spec.ell, "genus_y": spec.genus_y}
    info.update(params or {})
    return LinearCode(F, G, spec.structure, family, int(designed_distance), info,
                      spec.labels, tuple(names))


def encode(code: LinearCode, message: Sequence[int]) -> np.ndarray:
    """``message @ G`` over the code's field."""
    F = code.field
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (code.k,):
        raise CodeError(f"message length {msg.size} != k={code.k}")
    if msg.size and (msg.min() < 0 or msg.max() >= F.q):
        raise CodeError("message symbol outside the field")
    word = np.zeros(code.n, dtype=np.int64)
    for coef, row in zip(msg, code.G):
        if coef:
            word = F.add_arr(word, F.mul_arr(coef, row))
    return word


def local_interpolant(
    code: LinearCode,
    word: Sequence[int],
    present: Sequence[bool],
    pos: int,
    which_partition: int = 1,
) -> Poly:
    """Polynomial in the fiber coordinate through the surviving fiber symbols."""
    if not 0 <= pos < code.n:
        raise CodeError(f"position {pos} out of range")
    if present[pos]:
        raise CodeError(f"position {pos} is not erased")
    part = code.structure.partition(which_partition)
    helpers = [i for i in part.fiber_of(pos) if i != pos]
    missing = [i for i in helpers if not present[i]]
    if missing:
        raise CodeError(f"recovering set of {pos} has further erasures at {missing}")
    pts = [(part.xval[i], int(word[i])) for i in helpers]
    return interpolate(code.field, pts)


def local_recover(
    code: LinearCode,
    word: Sequence[int],
    present: Sequence[bool],
    pos: int,
    which_partition: int = 1,
) -> int:
    """Recover the erased symbol at ``pos`` from its recovering set."""
    f = local_interpolant(code, word, present, pos, which_partition)
    return f(code.structure.partition(which_partition).xval[pos])
