"""Rate/distance bounds for LRC codes and the AG-versus-GV crossover."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

FAMILIES = ("singleton", "gv", "ab1", "ab2", "tvz")

_GRID_POINTS = 1000
_GRID_LOW = 1e-6
_GOLDEN_TOL = 1e-10
_INVPHI = (math.sqrt(5) - 1) / 2


@dataclass(frozen=True)
class RatePoint:
    delta: float
    rate: float
    raw: float
    family: str

    def as_dict(self) -> dict:
        return {"delta": self.delta, "rate": self.rate, "raw": self.raw, "family": self.family}


def singleton_lrc(n: int, k: int, r: int) -> int:
    """Largest distance allowed for an ``(n, k, r)`` LRC code: ``n - k - ceil(k/r) + 2``."""
    if not 1 <= r <= k <= n:
        raise ValueError(f"need 1 <= r <= k <= n, got n={n} k={k} r={r}")
    return n - k - (-(-k // r)) + 2


def _clamp(x: float) -> float:
    return min(1.0, max(0.0, x))


def log_b(q: float, r: int, s: np.ndarray | float) -> np.ndarray:
    """Natural log of ``((1 + (q-1)s)^(r+1) + (q-1)(1-s)^(r+1)) / q``, overflow-free."""
    s = np.asarray(s, dtype=float)
    first = (r + 1) * np.log1p((q - 1) * s)
    with np.errstate(divide="ignore"):
        second = math.log(q - 1) + (r + 1) * np.log1p(-s)
    return np.logaddexp(first, second) - math.log(q)


def _gv_objective(q: float, r: int, delta: float, s):
    s = np.asarray(s, dtype=float)
    return (log_b(q, r, s) / (r + 1) - delta * np.log(s)) / math.log(q)


def _golden(fn, lo: float, hi: float, tol: float) -> tuple[float, float]:
    c = hi - _INVPHI * (hi - lo)
    d = lo + _INVPHI * (hi - lo)
    fc, fd = fn(c), fn(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - _INVPHI * (hi - lo)
            fc = fn(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INVPHI * (hi - lo)
            fd = fn(d)
    x = (lo + hi) / 2
    return x, fn(x)


def gv_min(q: float, r: int, delta: float, grid: int = _GRID_POINTS) -> float:
    """``min_{0 < s <= 1}`` of the GV exponent, including the ``s -> 0+`` limit."""
    s = np.geomspace(_GRID_LOW, 1.0, grid)
    vals = _gv_objective(q, r, delta, s)
    i = int(np.argmin(vals))
    lo = s[max(i - 1, 0)]
    hi = s[min(i + 1, grid - 1)]
    _, fmin = _golden(lambda x: float(_gv_objective(q, r, delta, x)), lo, hi, _GOLDEN_TOL)
    best = min(float(vals[i]), fmin)
    if delta == 0:
        # b(s) -> 1 as s -> 0+, so the infimum is the boundary limit 0.
        best = min(best, 0.0)
    return best


def gv_lrc_raw(q: float, r: int, delta: float, grid: int = _GRID_POINTS) -> float:
    if not 0 <= delta < 1:
        raise ValueError("delta must lie in [0, 1)")
    return r / (r + 1) - gv_min(q, r, delta, grid)


def gv_lrc(q: float, r: int, delta: float, grid: int = _GRID_POINTS) -> float:
    """Rate achievable by q-ary linear r-LRC codes of relative distance ``delta``."""
    return _clamp(gv_lrc_raw(q, r, delta, grid))


def ag_locality(q0: int, family: str) -> int:
    return {"ab1": q0 - 1, "ab2": q0}[family]


def ag_rate_raw(q0: int, delta: float, family: str) -> float:
    q = q0 * q0
    if family == "ab1":
        r = q0 - 1
        return r / (r + 1) * (1 - delta - 3 / (q0 + 1))
    if family == "ab2":
        r = q0
        return r / (r + 1) * (1 - delta - 2 * q0 / (q - 1))
    if family == "tvz":
        return 1 - delta - 1 / (q0 - 1)
    raise ValueError(f"unknown AG family {family!r}")


def ag_rate(q0: int, delta: float, family: str = "ab2") -> float:
    """Asymptotic rate of the tower codes (``ab1``, ``ab2``) or plain AG codes (``tvz``)."""
    if not 0 <= delta <= 1:
        raise ValueError("delta must lie in [0, 1]")
    return _clamp(ag_rate_raw(q0, delta, family))


def rate_point(family: str, delta: float, *, q: float | None = None, r: int | None = None,
               q0: int | None = None) -> RatePoint:
    if family == "gv":
        raw = gv_lrc_raw(q, r, delta)
    elif family in ("ab1", "ab2", "tvz"):
        raw = ag_rate_raw(q0, delta, family)
    elif family == "singleton":
        # asymptotic form of n - k - k/r + 2 >= d
        raw = r / (r + 1) * (1 - delta)
    else:
        raise ValueError(f"unknown family {family!r}")
    return RatePoint(delta, _clamp(raw), raw, family)


@dataclass(frozen=True)
class Crossover:
    q0: int
    family: str
    gv_r: int
    lo: float | None
    hi: float | None

    @property
    def empty(self) -> bool:
        return self.lo is None

    def as_dict(self) -> dict:
        return {"q0": self.q0, "family": self.family, "gv_r": self.gv_r,
                "delta_lo": self.lo, "delta_hi": self.hi, "empty": self.empty}


def crossover_interval(
    q0: int, family: str = "ab2", resolution: float = 1e-3, gv_r: int | None = None
) -> Crossover:
    """Maximal ``delta`` interval on which the AG rate beats the GV rate.

    GV is evaluated over ``q = q0^2`` with the family's locality unless
    ``gv_r`` is given.  Endpoints are bisected to ``resolution / 10``.
    """
    if resolution > 1e-3:
        raise ValueError("resolution must be <= 1e-3")
    q = q0 * q0
    r = ag_locality(q0, family) if gv_r is None else gv_r

    def diff(d: float) -> float:
        return ag_rate_raw(q0, d, family) - gv_lrc_raw(q, r, d)

    grid = np.arange(0.0, 1.0, resolution)
    signs = np.array([diff(d) > 0 for d in grid])
    if not signs.any():
        return Crossover(q0, family, r, None, None)
    # longest run of positive differences
    best, start = (0, 0), None
    for i, pos in enumerate(list(signs) + [False]):
        if pos and start is None:
            start = i
        elif not pos and start is not None:
            if i - start > best[1] - best[0]:
                best = (start, i)
            start = None
    i0, i1 = best

    def bisect(a: float, b: float) -> float:
        fa = diff(a) > 0
        while b - a > resolution / 10:
            mid = (a + b) / 2
            if (diff(mid) > 0) == fa:
                a = mid
            else:
                b = mid
        return (a + b) / 2

    lo = grid[i0] if i0 == 0 else bisect(grid[i0 - 1], grid[i0])
    hi = grid[i1 - 1] if i1 >= len(grid) else bisect(grid[i1 - 1], grid[i1])
    return Crossover(q0, family, r, float(lo), float(hi))
