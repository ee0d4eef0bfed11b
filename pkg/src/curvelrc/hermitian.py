"""Codes on the Hermitian curve ``x^q0 + x = y^(q0+1)`` over GF(q0^2).

Three families are built from the affine points:

* projection on y: fibers are the columns ``y = const`` (size q0), repaired by
  interpolation in x;
* projection on x: fibers are the rows ``x = const`` for x outside the trace
  kernel (size q0 + 1), repaired by interpolation in y;
* two recovering sets: the monomials ``x^i y^j`` (``i <= q0-2, j <= q0-1``)
  on the points with ``y != 0``, where both column and row repairs apply.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .galois import FiniteField, make_field, prime_power, trace_kernel
from .lrc_core import (
    CodeError,
    EvaluationCodeSpec,
    LinearCode,
    Partition,
    RecoveringStructure,
    build_generator,
)


@dataclass(frozen=True)
class HermitianGeometry:
    q0: int
    field: FiniteField
    points: tuple[tuple[int, int], ...]
    columns: dict[int, tuple[int, ...]]
    rows: dict[int, tuple[int, ...]]
    kernel: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.field.q


def hermitian_field(q0: int) -> FiniteField:
    pb = prime_power(q0)
    if pb is None:
        raise CodeError(f"q0={q0} is not a prime power")
    p, b = pb
    return make_field(p, 2 * b)


def enumerate_points(q0: int) -> HermitianGeometry:
    """All affine points, column by column (canonical y, then canonical x)."""
    F = hermitian_field(q0)
    elems = F.elements()
    trace = {x: F.add(F.pow(x, q0), x) for x in elems}
    points = []
    columns: dict[int, tuple[int, ...]] = {}
    for y in elems:
        rhs = F.pow(y, q0 + 1)
        col = tuple(x for x in elems if trace[x] == rhs)
        columns[y] = col
        points.extend((x, y) for x in col)
    kernel = tuple(trace_kernel(F))
    on_curve = set(points)
    rows = {}
    for x in elems:
        if x in kernel:
            continue
        rows[x] = tuple(y for y in elems if (x, y) in on_curve)
    geo = HermitianGeometry(q0, F, tuple(points), columns, rows, kernel)
    _check_geometry(geo)
    return geo


def _check_geometry(geo: HermitianGeometry) -> None:
    q0 = geo.q0
    if len(geo.points) != q0**3:
        raise CodeError(f"expected {q0**3} affine points, found {len(geo.points)}")
    if any(len(c) != q0 for c in geo.columns.values()):
        raise CodeError("a column does not have q0 points")
    if any(len(r) != q0 + 1 for r in geo.rows.values()):
        raise CodeError("a row outside the trace kernel does not have q0+1 points")
    if len(geo.kernel) != q0:
        raise CodeError("trace kernel has the wrong size")


def _names(var: str, count: int) -> tuple[str, ...]:
    return tuple("1" if j == 0 else (var if j == 1 else f"{var}^{j}") for j in range(count))


def code_proj_y(q0: int, t: int) -> LinearCode:
    """``n = q0^3, k = (t+1)(q0-1), r = q0-1``; basis ``y^j x^i``."""
    geo = enumerate_points(q0)
    F = geo.field
    fibers, xval, labels, base = [], [], [], []
    for y in F.elements():
        col = sorted(geo.columns[y], key=F.rank)
        fibers.append(tuple(range(len(xval), len(xval) + len(col))))
        xval.extend(col)
        labels.extend((x, y) for x in col)
        base.append(y)
    base = np.array(base, dtype=np.int64)
    basis = np.array([F.pow_arr(base, j) for j in range(t + 1)], dtype=np.int64)
    structure = RecoveringStructure(len(xval), (Partition(tuple(fibers), tuple(xval)),))
    spec = EvaluationCodeSpec(F, structure, basis, r=q0 - 1, t=t, h=q0 + 1,
                              basis_names=_names("y", t + 1), fiber_var="x",
                              labels=tuple(labels))
    return build_generator(spec, family="hermitian-y", params={"q0": q0})


def code_proj_x(q0: int, t: int) -> LinearCode:
    """``n = q0^3 - q0, k = (t+1) q0, r = q0``; basis ``x^j y^i`` over x outside the kernel."""
    geo = enumerate_points(q0)
    F = geo.field
    fibers, xval, labels, base = [], [], [], []
    for x in sorted(geo.rows, key=F.rank):
        row = sorted(geo.rows[x], key=F.rank)
        fibers.append(tuple(range(len(xval), len(xval) + len(row))))
        xval.extend(row)
        labels.extend((x, y) for y in row)
        base.append(x)
    base = np.array(base, dtype=np.int64)
    basis = np.array([F.pow_arr(base, j) for j in range(t + 1)], dtype=np.int64)
    structure = RecoveringStructure(len(xval), (Partition(tuple(fibers), tuple(xval)),))
    spec = EvaluationCodeSpec(F, structure, basis, r=q0, t=t, h=q0,
                              basis_names=_names("x", t + 1), fiber_var="y",
                              labels=tuple(labels))
    return build_generator(spec, family="hermitian-x", params={"q0": q0})


def lrc2_designed_distance(q0: int) -> int:
    return (q0 + 1) * (q0 * q0 - 3 * q0 + 3)


def code_lrc2(q0: int) -> LinearCode:
    """Two disjoint recovering sets: columns (size q0) and rows (size q0+1)."""
    if q0 < 3:
        raise CodeError("two-recovering-set codes need q0 >= 3")
    geo = enumerate_points(q0)
    F = geo.field
    fibers, xval, labels, base = [], [], [], []
    for y in F.elements():
        if y == 0:
            continue
        col = sorted(geo.columns[y], key=F.rank)
        fibers.append(tuple(range(len(xval), len(xval) + len(col))))
        xval.extend(col)
        labels.extend((x, y) for x in col)
        base.append(y)
    index = {pt: i for i, pt in enumerate(labels)}
    rows = []
    for x in sorted(geo.rows, key=F.rank):
        rows.append(tuple(index[(x, y)] for y in sorted(geo.rows[x], key=F.rank)))
    yval = tuple(y for _, y in labels)
    structure = RecoveringStructure(
        len(xval), (Partition(tuple(fibers), tuple(xval)), Partition(tuple(rows), yval))
    )
    base = np.array(base, dtype=np.int64)
    basis = np.array([F.pow_arr(base, j) for j in range(q0)], dtype=np.int64)
    spec = EvaluationCodeSpec(F, structure, basis, r=q0 - 1, t=q0 - 1, h=q0 + 1,
                              basis_names=_names("y", q0), fiber_var="x",
                              labels=tuple(labels))
    n = len(xval)
    general_bound = n - (q0 - 1) * q0 - (q0 - 2) * (q0 + 1)
    return build_generator(
        spec,
        family="hermitian-lrc2",
        designed_distance=lrc2_designed_distance(q0),
        params={"q0": q0, "d_general_bound": general_bound},
    )


def singleton_gap(code: LinearCode) -> int:
    """``(n + 2) - (d_designed + k(r+1)/r)``: zero for codes meeting the LRC Singleton bound."""
    r = code.r
    if code.k % r:
        raise CodeError(f"r={r} does not divide k={code.k}")
    return code.n + 2 - (code.designed_distance + code.k * (r + 1) // r)
