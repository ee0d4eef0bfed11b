"""Verification tools: rank, exhaustive distance, locality certificates."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .galois import FiniteField, interpolate
from .lrc_core import LinearCode, encode, local_recover

DEFAULT_CAP = 10**9

# Target number of symbols held in the precomputed low block.
_LOW_BLOCK_SYMBOLS = 2_000_000


class EnumerationCapError(RuntimeError):
    pass


def enumeration_cap() -> int:
    return int(os.environ.get("LRC_CAP", DEFAULT_CAP))


# -- linear algebra ---------------------------------------------------------


def row_reduce(F: FiniteField, M: np.ndarray, ncols: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over ``F``; pivots searched in the first ``ncols`` columns."""
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    m, n = R.shape
    ncols = n if ncols is None else ncols
    pivots: list[int] = []
    pr = 0
    for col in range(ncols):
        if pr == m:
            break
        nz = np.nonzero(R[pr:, col])[0]
        if nz.size == 0:
            continue
        src = pr + int(nz[0])
        if src != pr:
            R[[pr, src]] = R[[src, pr]]
        R[pr] = F.mul_arr(F.inv(int(R[pr, col])), R[pr])
        factors = F.neg_arr(R[:, col].copy())
        factors[pr] = 0
        R = F.add_arr(R, F.mul_arr(factors[:, None], R[pr][None, :]))
        pivots.append(col)
        pr += 1
    return R, pivots


def rank(F: FiniteField, M: np.ndarray) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(row_reduce(F, M)[1])


def solve(F: FiniteField, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    """One solution ``x`` of ``A x = b`` (free variables set to 0), or None."""
    A = np.asarray(A, dtype=np.int64)
    aug = np.concatenate([A, np.asarray(b, dtype=np.int64).reshape(-1, 1)], axis=1)
    R, piv = row_reduce(F, aug, ncols=A.shape[1])
    rows_left = R[len(piv):, -1]
    if np.any(rows_left != 0):
        return None
    x = np.zeros(A.shape[1], dtype=np.int64)
    for row, col in enumerate(piv):
        x[col] = R[row, -1]
    return x


def systematic_form(F: FiniteField, G: np.ndarray) -> np.ndarray:
    R, piv = row_reduce(F, G)
    return R[: len(piv)]


def matvec(F: FiniteField, M: np.ndarray, v: np.ndarray) -> np.ndarray:
    prod = F.mul_arr(np.asarray(M), np.asarray(v)[None, :])
    out = np.zeros(prod.shape[0], dtype=np.int64)
    for col in prod.T:
        out = F.add_arr(out, col)
    return out


# -- exhaustive enumeration --------------------------------------------------


@dataclass(frozen=True)
class DistanceReport:
    distance: int
    enumerated: int
    wall_time: float
    workers: int
    scalar_reduced: bool
    weight_distribution: tuple[int, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "distance": self.distance,
            "enumerated": self.enumerated,
            "wall_time": round(self.wall_time, 6),
            "workers": self.workers,
            "scalar_reduced": self.scalar_reduced,
            "weight_distribution": (
                list(self.weight_distribution) if self.weight_distribution is not None else None
            ),
        }


def _span_block(F: FiniteField, rows: np.ndarray, n: int) -> np.ndarray:
    """All combinations of ``rows``; the first row is the most significant digit."""
    elems = np.array(F.elements(), dtype=np.int64)
    block = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        mults = F.mul_arr(elems[:, None], row[None, :])
        block = F.add_arr(block[:, None, :], mults[None, :, :]).reshape(-1, n)
    return block


def _high_vector(F: FiniteField, rows: np.ndarray, index: int, n: int) -> np.ndarray:
    q = F.q
    digits = []
    for _ in range(len(rows)):
        digits.append(index % q)
        index //= q
    digits.reverse()
    elems = F.elements()
    vec = np.zeros(n, dtype=np.int64)
    for d, row in zip(digits, rows):
        if d:
            vec = F.add_arr(vec, F.mul_arr(elems[d], row))
    return vec


def _run_task(task: tuple) -> tuple[int, np.ndarray, int]:
    F, G, lead, n_low, hi_lo, hi_hi, skip_zero = task
    n = G.shape[1]
    if lead is None:
        offset = np.zeros(n, dtype=np.int64)
        tail = G
    else:
        offset = G[lead]
        tail = G[lead + 1 :]
    high_rows = tail[: len(tail) - n_low]
    low_block = _span_block(F, tail[len(tail) - n_low :], n)
    best = n + 1
    hist = np.zeros(n + 1, dtype=np.int64)
    count = 0
    for hi in range(hi_lo, hi_hi):
        base = F.add_arr(offset, _high_vector(F, high_rows, hi, n))
        words = F.add_arr(low_block, base[None, :])
        w = np.count_nonzero(words, axis=1)
        if skip_zero and hi == 0:
            w = w[1:]
        if w.size:
            best = min(best, int(w.min()))
            hist += np.bincount(w, minlength=n + 1)
            count += w.size
    return best, hist, count


def _tasks(F: FiniteField, G: np.ndarray, scalar_reduce: bool, workers: int) -> list[tuple]:
    k, n = G.shape
    q = F.q
    tasks = []
    leads = range(k) if scalar_reduce else [None]
    for lead in leads:
        tail_len = k if lead is None else k - lead - 1
        n_low = 0
        while n_low < tail_len and q ** (n_low + 1) * n <= _LOW_BLOCK_SYMBOLS:
            n_low += 1
        n_high = q ** (tail_len - n_low)
        chunks = max(1, min(n_high, 4 * workers))
        bounds = np.linspace(0, n_high, chunks + 1).astype(np.int64)
        for lo, hi in zip(bounds[:-1], bounds[1:]):
            if hi > lo:
                tasks.append((F, G, lead, n_low, int(lo), int(hi), lead is None))
    return tasks


def _enumerate(code: LinearCode, workers: int, scalar_reduce: bool, cap: int | None):
    F, G = code.field, np.asarray(code.G)
    q, k = F.q, code.k
    total = (q**k - 1) // (q - 1) if scalar_reduce else q**k - 1
    cap = enumeration_cap() if cap is None else cap
    if total > cap:
        raise EnumerationCapError(f"{total} messages exceed the enumeration cap {cap}")
    tasks = _tasks(F, G, scalar_reduce, workers)
    if workers <= 1:
        results = [_run_task(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_run_task, tasks))
    best = min(r[0] for r in results)
    hist = sum(r[1] for r in results)
    count = sum(r[2] for r in results)
    return best, hist, count


def min_distance_exhaustive(
    code: LinearCode,
    workers: int = 1,
    scalar_reduce: bool = True,
    cap: int | None = None,
    with_weights: bool = False,
) -> DistanceReport:
    """Exact minimum distance by enumerating every nonzero message.

    With ``scalar_reduce`` only messages whose first nonzero symbol is 1 are
    visited; weights are invariant under nonzero scaling so the minimum is
    unchanged.
    """
    t0 = time.perf_counter()
    best, hist, count = _enumerate(code, workers, scalar_reduce, cap)
    wd = None
    if with_weights:
        if scalar_reduce:
            hist = hist * (code.field.q - 1)
        hist = hist.copy()
        hist[0] += 1
        wd = tuple(int(v) for v in hist)
    return DistanceReport(best, count, time.perf_counter() - t0, workers, scalar_reduce, wd)


def weight_distribution(code: LinearCode, workers: int = 1, cap: int | None = None) -> list[int]:
    """``A_w`` for ``w = 0..n``; sums to ``q^k``."""
    rep = min_distance_exhaustive(code, workers, True, cap, with_weights=True)
    return list(rep.weight_distribution)


def all_codewords(code: LinearCode, cap: int = 10**6) -> np.ndarray:
    q, k = code.field.q, code.k
    if q**k > cap:
        raise EnumerationCapError(f"{q**k} codewords exceed cap {cap}")
    return _span_block(code.field, np.asarray(code.G), code.n)


# -- locality ------------------------------------------------------------------


@dataclass(frozen=True)
class LocalityCertificate:
    """Dual vectors proving each coordinate is a function of its recovering set."""

    partition: int
    ok: bool
    vectors: dict[int, np.ndarray]
    failing: int | None = None


def verify_locality(code: LinearCode, which_partition: int = 1) -> LocalityCertificate:
    """For every coordinate ``i`` find a dual codeword supported on its fiber with ``h_i != 0``.

    Such a vector exists iff column ``i`` of ``G`` lies in the span of the other
    columns of the fiber; the vector is rechecked against ``G`` before use.
    """
    F = code.field
    G = np.asarray(code.G)
    part = code.structure.partition(which_partition)
    vectors: dict[int, np.ndarray] = {}
    for i in range(code.n):
        helpers = [j for j in part.fiber_of(i) if j != i]
        x = solve(F, G[:, helpers], G[:, i])
        if x is None:
            return LocalityCertificate(which_partition, False, vectors, i)
        h = np.zeros(code.n, dtype=np.int64)
        h[helpers] = x
        h[i] = F.neg(1)
        if np.any(matvec(F, G, h) != 0):
            return LocalityCertificate(which_partition, False, vectors, i)
        vectors[i] = h
    return LocalityCertificate(which_partition, True, vectors)


def locality_exhaustive(code: LinearCode, which_partition: int = 1, cap: int = 10**6) -> bool:
    """Check the set-disjointness definition of locality over all codewords."""
    words = all_codewords(code, cap)
    part = code.structure.partition(which_partition)
    q = code.field.q
    if q ** (part.locality + 1) >= 2**62:
        raise EnumerationCapError("restriction keys do not fit in 64 bits")
    for i in range(code.n):
        helpers = [j for j in part.fiber_of(i) if j != i]
        weights = q ** np.arange(len(helpers), dtype=np.int64)
        restr = words[:, helpers] @ weights
        with_value = restr * q + words[:, i]
        # disjoint iff each restriction pattern pins down a single value at i
        if len(np.unique(with_value)) != len(np.unique(restr)):
            return False
    return True


def fiber_residuals(code: LinearCode, word: Sequence[int], which_partition: int = 1) -> int:
    """Number of fibers on which ``word`` is not a polynomial of degree < fiber size - 1."""
    F = code.field
    part = code.structure.partition(which_partition)
    bad = 0
    for fib in part.fibers:
        pts = [(part.xval[i], int(word[i])) for i in fib]
        f = interpolate(F, pts[:-1])
        if F.sub(f(pts[-1][0]), pts[-1][1]) != 0:
            bad += 1
    return bad


# -- erasure round trips -------------------------------------------------------


@dataclass(frozen=True)
class RoundtripReport:
    trials: int
    checks: int
    passes: int
    failures: tuple[tuple[int, int], ...] = ()

    @property
    def ok(self) -> bool:
        return self.passes == self.checks

    def as_dict(self) -> dict:
        return {"trials": self.trials, "checks": self.checks, "passes": self.passes,
                "ok": self.ok, "failures": [list(f) for f in self.failures]}


def erasure_roundtrip(
    code: LinearCode, trials: int = 100, seed: int = 0, zero_message: bool = False
) -> RoundtripReport:
    """Encode a random message, erase one random coordinate, repair it via every partition."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    checks = passes = 0
    failures = []
    for trial in range(trials):
        msg = np.zeros(code.k, dtype=np.int64) if zero_message else rng.integers(0, code.field.q, code.k)
        word = encode(code, msg)
        pos = int(rng.integers(0, code.n))
        present = np.ones(code.n, dtype=bool)
        present[pos] = False
        erased = word.copy()
        erased[pos] = 0
        for which in range(1, len(code.structure.partitions) + 1):
            checks += 1
            if local_recover(code, erased, present, pos, which) == word[pos]:
                passes += 1
            else:
                failures.append((trial, pos))
    return RoundtripReport(trials, checks, passes, tuple(failures))
