"""Garcia-Stichtenoth tower over GF(q0^2): rational points and designed parameters.

Level ``l`` adds a coordinate ``z_l`` with ``z_l^q0 + z_l = x_{l-1}^(q0+1)``
where ``x_1`` is the base coordinate and ``x_i = z_i / x_{i-1}``.  Over
``x_1 != 0`` every fiber splits completely, giving ``q0^(l-1) (q0^2 - 1)``
rational points at level ``l``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .galois import FiniteField
from .hermitian import code_proj_x, hermitian_field
from .lrc_core import CodeError, LinearCode

POINT_CAP = 10**6


def tower_length(q0: int, l: int) -> int:
    """``n_l = q0^(l-1) (q0^2 - 1)``."""
    return q0 ** (l - 1) * (q0 * q0 - 1)


@dataclass(frozen=True)
class TowerPoint:
    x1: int
    z: tuple[int, ...]

    @property
    def coords(self) -> tuple[int, ...]:
        return (self.x1,) + self.z


def _tower_x(F: FiniteField, x1: int, z: tuple[int, ...]) -> list[int]:
    xs = [x1]
    for zi in z:
        xs.append(F.div(zi, xs[-1]))
    return xs


def is_on_tower(F: FiniteField, q0: int, pt: TowerPoint) -> bool:
    xs = [pt.x1]
    for zi in pt.z:
        if xs[-1] == 0:
            return False
        if F.add(F.pow(zi, q0), zi) != F.pow(xs[-1], q0 + 1):
            return False
        xs.append(F.div(zi, xs[-1]))
    return True


def enumerate_tower_points(q0: int, l: int, field: FiniteField | None = None) -> list[TowerPoint]:
    """Depth-first enumeration of the points of level ``l`` above ``x_1 != 0``.

    Points come out in canonical order of ``x1`` then of each ``z_i``.
    """
    if l < 1:
        raise CodeError("tower level must be >= 1")
    if tower_length(q0, l) > POINT_CAP:
        raise CodeError(f"level {l} over q0={q0} exceeds the {POINT_CAP} point cap")
    F = field or hermitian_field(q0)
    elems = F.elements()
    solutions: dict[int, list[int]] = {}
    for z in elems:
        solutions.setdefault(F.add(F.pow(z, q0), z), []).append(z)

    out: list[TowerPoint] = []

    def grow(x1: int, zs: tuple[int, ...], x_prev: int) -> None:
        if len(zs) == l - 1:
            out.append(TowerPoint(x1, zs))
            return
        # x_prev != 0 on this branch: the right-hand side is a nonzero norm,
        # so every solution z is nonzero and the next x stays nonzero.
        for z in solutions.get(F.pow(x_prev, q0 + 1), ()):
            x_next = F.div(z, x_prev)
            if x_next == 0:
                continue
            grow(x1, zs + (z,), x_next)

    for x1 in elems[1:]:
        grow(x1, (), x1)
    return out


@dataclass(frozen=True)
class TowerParams:
    family: str
    q0: int
    l: int
    t: int
    n: int
    k_lower: int
    d_lower: int
    r: int
    h: int
    genus_bound: int
    k_lower_raw: int
    clamped: bool

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n, self.k_lower, self.d_lower, self.r)

    def as_dict(self) -> dict:
        return {f: getattr(self, f) for f in self.__dataclass_fields__}


def _clamp(k_raw: int) -> tuple[int, bool]:
    if k_raw < 0:
        warnings.warn(f"dimension lower bound {k_raw} is negative; reporting 0", stacklevel=3)
        return 0, True
    return k_raw, False


def gs1_t_range(q0: int, l: int) -> tuple[int, int]:
    lo = 0 if l == 2 else tower_length(q0, l - 1) // (q0 - 1)
    return lo, tower_length(q0, l - 1)


def gs2_t_range(q0: int, l: int) -> tuple[int, int]:
    return q0 ** (l - 1), tower_length(q0, l - 1)


def gs1_params(q0: int, l: int, t: int, check_range: bool = True) -> TowerParams:
    """Codes on level ``l`` fibered over level ``l-1``; ``r = q0 - 1``, ``h = 2 q0^(l-1)``."""
    if l < 2:
        raise CodeError("level must be >= 2")
    lo, hi = gs1_t_range(q0, l)
    if check_range and not lo <= t <= hi:
        raise CodeError(f"t={t} outside [{lo}, {hi}]")
    r = q0 - 1
    n = tower_length(q0, l)
    n_prev = tower_length(q0, l - 1)
    k_raw = r * (t - n_prev // (q0 - 1) + 1)
    # 2 n_l (q0-2) / (q0^2-1) reduces to the integer 2 q0^(l-1) (q0-2)
    d = n - t * q0 - 2 * q0 ** (l - 1) * (q0 - 2)
    k, clamped = _clamp(k_raw)
    return TowerParams("gs1", q0, l, t, n, k, d, r, 2 * q0 ** (l - 1), n_prev // (q0 - 1),
                       k_raw, clamped)


def gs2_params(q0: int, l: int, t: int, check_range: bool = True) -> TowerParams:
    """Codes fibered by the second projection; ``r = q0``, ``h = q0^(l-1)``."""
    if l < 2:
        raise CodeError("level must be >= 2")
    lo, hi = gs2_t_range(q0, l)
    if check_range and not lo <= t <= hi:
        raise CodeError(f"t={t} outside [{lo}, {hi}]")
    r = q0
    n = tower_length(q0, l)
    h = q0 ** (l - 1)
    k_raw = r * (t - h + 1)
    d = n - t * (q0 + 1) - (q0 - 1) * h
    k, clamped = _clamp(k_raw)
    return TowerParams("gs2", q0, l, t, n, k, d, r, h, h, k_raw, clamped)


def gs2_code_l2(q0: int, t: int) -> LinearCode:
    """Level-2 member of the second family: the Hermitian projection-on-x code."""
    code = code_proj_x(q0, t)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        par = gs2_params(q0, 2, t, check_range=False)
    if (code.n, code.r, code.designed_distance) != (par.n, par.r, par.d_lower) or code.k < par.k_lower:
        raise CodeError(
            f"level-2 code {(code.n, code.k, code.r, code.designed_distance)} "
            f"disagrees with tower parameters {par.as_tuple()}"
        )
    return code
