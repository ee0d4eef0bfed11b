"""Arithmetic in GF(p^a) backed by log/antilog tables.

Elements are plain Python ints in ``range(q)``.  The base-p digits of an
element (least significant first) are the coefficients of its polynomial
representative modulo the field's defining polynomial, so ``0`` is zero,
``1`` is one, and in GF(9) built from ``t^2 - t - 1`` the element ``3`` is the
class of ``t``.

Irreducible moduli used when none is given (coefficients low-to-high):
    GF(4)  : t^2 + t + 1        -> (1, 1, 1)
    GF(8)  : t^3 + t + 1        -> (1, 1, 0, 1)
    GF(9)  : t^2 - t - 1        -> (2, 2, 1)
    GF(16) : t^4 + t + 1        -> (1, 1, 0, 0, 1)
    GF(25) : t^2 + t + 2        -> (2, 1, 1)
    GF(49) : t^2 + t + 3        -> (3, 1, 1)
    GF(64) : t^6 + t + 1        -> (1, 1, 0, 0, 0, 0, 1)
    GF(81) : t^4 + t + 2        -> (2, 1, 0, 0, 1)
Any other (p, a) falls back to the lexicographically first monic irreducible
polynomial (by constant term first) for which ``t`` is primitive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (5, 2): (2, 1, 1),
    (7, 2): (3, 1, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
}

# Above this order the q x q addition table is not materialized.
_ADD_TABLE_MAX_Q = 1024


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return ``(p, b)`` with ``n == p**b`` or None if ``n`` is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            b = 0
            m = n
            while m % p == 0:
                m //= p
                b += 1
            return (p, b) if m == 1 else None
    return None


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over the prime field, as coefficient lists low-to-high --------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    num = _trim([x % p for x in num])
    den = _trim([x % p for x in den])
    inv_lead = pow(den[-1], -1, p)
    while len(num) >= len(den):
        c = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
        _trim(num)
    return num


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(modulus) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _pmod(modulus, list(low) + [1], p):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FiniteField:
    """A materialized GF(p^a).

    Attributes:
        p: characteristic.
        a: extension degree.
        modulus: monic irreducible defining polynomial, low-to-high.
        primitive: a generator of the multiplicative group (int encoding).
    """

    p: int
    a: int
    modulus: tuple[int, ...]
    primitive: int
    exp: np.ndarray = dc_field(repr=False)
    log: np.ndarray = dc_field(repr=False)
    _digits: np.ndarray = dc_field(repr=False)
    _add: np.ndarray | None = dc_field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.a

    @property
    def order(self) -> int:
        return self.q

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.a, self.modulus, self.primitive) == (
            other.p,
            other.a,
            other.modulus,
            other.primitive,
        )

    def __hash__(self) -> int:
        return hash((self.p, self.a, self.modulus, self.primitive))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.a}, modulus={self.modulus}, primitive={self.primitive})"

    # -- element bookkeeping ----------------------------------------------

    def elements(self) -> list[int]:
        """All elements in canonical order: 0, g^0, g^1, ..., g^(q-2)."""
        return [0] + [int(v) for v in self.exp[: self.q - 1]]

    def rank(self, x: int) -> int:
        """Position of ``x`` in the canonical ordering."""
        return 0 if x == 0 else 1 + int(self.log[x])

    def alpha(self, k: int) -> int:
        """The primitive element raised to ``k`` (any integer)."""
        return int(self.exp[k % (self.q - 1)])

    def log_index(self, x: int) -> int:
        """Discrete log of ``x``, or -1 for zero (the wire encoding)."""
        self._check(x)
        return -1 if x == 0 else int(self.log[x])

    def from_log_index(self, i: int) -> int:
        if i == -1:
            return 0
        if not 0 <= i < self.q - 1:
            raise FieldError(f"log index {i} out of range for q={self.q}")
        return int(self.exp[i])

    def coefficients(self, x: int) -> tuple[int, ...]:
        return tuple(int(d) for d in self._digits[x])

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.a:
            raise FieldError("too many coefficients")
        return sum((c % self.p) * self.p**i for i, c in enumerate(coeffs))

    def _check(self, x: int) -> None:
        if not 0 <= x < self.q:
            raise FieldError(f"{x} is not an element of GF({self.q})")

    # -- scalar arithmetic ----------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        if self._add is not None:
            return int(self._add[x, y])
        d = (self._digits[x] + self._digits[y]) % self.p
        return self.from_coefficients(d.tolist())

    def neg(self, x: int) -> int:
        if self.p == 2:
            return x
        if self.a == 1:
            return (-x) % self.p
        return self.from_coefficients(((-self._digits[x]) % self.p).tolist())

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp[(self.log[x] + self.log[y]) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(-self.log[x]) % (self.q - 1)])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        if e == 0:
            return 1
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return int(self.exp[(int(self.log[x]) * e) % (self.q - 1)])

    def sum(self, xs: Iterable[int]) -> int:
        acc = 0
        for x in xs:
            acc = self.add(acc, x)
        return acc

    # -- vectorized arithmetic on integer arrays -------------------------

    def add_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.a == 1:
            return (x + y) % self.p
        if self.p == 2:
            return np.bitwise_xor(x, y)
        if self._add is not None:
            return self._add[x, y]
        x, y = np.broadcast_arrays(x, y)
        d = (self._digits[x] + self._digits[y]) % self.p
        return d @ (self.p ** np.arange(self.a, dtype=np.int64))

    def neg_arr(self, x: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return x
        if self.a == 1:
            return (-x) % self.p
        d = (-self._digits[x]) % self.p
        return d @ (self.p ** np.arange(self.a, dtype=np.int64))

    def mul_arr(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        out = self.exp[(self.log[x] + self.log[y]) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def pow_arr(self, x: np.ndarray, e: int) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones_like(x)
        out = self.exp[(self.log[x] * e) % (self.q - 1)]
        return np.where(x == 0, 0, out)

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "a": self.a,
            "modulus": list(self.modulus),
            "primitive": self.primitive,
        }


def _raw_mul(x: int, y: int, p: int, a: int, modulus: Sequence[int]) -> int:
    dx = [(x // p**i) % p for i in range(a)]
    dy = [(y // p**i) % p for i in range(a)]
    prod = [0] * (2 * a - 1)
    for i, u in enumerate(dx):
        if u:
            for j, v in enumerate(dy):
                prod[i + j] = (prod[i + j] + u * v) % p
    rem = _pmod(prod, modulus, p) if a > 1 else [prod[0] % p]
    return sum(c * p**i for i, c in enumerate(rem))


def _multiplicative_order_is_full(g: int, p: int, a: int, modulus: Sequence[int]) -> bool:
    q = p**a
    if g == 0:
        return False

    def rpow(x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = _raw_mul(result, base, p, a, modulus)
            base = _raw_mul(base, base, p, a, modulus)
            e >>= 1
        return result

    if rpow(g, q - 1) != 1:
        return False
    return all(rpow(g, (q - 1) // f) != 1 for f in _prime_factors(q - 1))


def _first_primitive_modulus(p: int, a: int) -> tuple[int, ...]:
    t = p if a > 1 else None
    for low in itertools.product(range(p), repeat=a):
        cand = tuple(low) + (1,)
        if low[0] == 0 or not is_irreducible(cand, p):
            continue
        if t is None or _multiplicative_order_is_full(t, p, a, cand):
            return cand
    raise FieldError(f"no primitive polynomial found for GF({p}^{a})")


def make_field(
    p: int, a: int = 1, modulus: Sequence[int] | None = None, primitive: int | None = None
) -> FiniteField:
    """Build GF(p^a).

    ``modulus`` is a monic degree-``a`` polynomial over GF(p), coefficients
    low-to-high.  When ``primitive`` is omitted, the class of ``t`` is used if
    it generates the multiplicative group, else the smallest element that does.
    """
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if a < 1:
        raise FieldError("extension degree must be >= 1")
    if modulus is None:
        if a == 1:
            modulus = (0, 1)
        else:
            modulus = DEFAULT_MODULI.get((p, a)) or _first_primitive_modulus(p, a)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != a + 1 or modulus[-1] != 1:
        raise FieldError(f"modulus must be monic of degree {a}")
    if not is_irreducible(modulus, p):
        raise FieldError(f"modulus {modulus} is reducible over GF({p})")

    q = p**a
    if primitive is None:
        candidates = ([p] if a > 1 else []) + list(range(2, q))
        primitive = next(
            (g for g in candidates if _multiplicative_order_is_full(g, p, a, modulus)),
            1 if q == 2 else None,
        )
        if primitive is None:
            raise FieldError("no primitive element found")
    elif q > 2 and not _multiplicative_order_is_full(primitive, p, a, modulus):
        raise FieldError(f"{primitive} is not a primitive element")

    exp = np.zeros(2 * (q - 1), dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    v = 1
    for i in range(q - 1):
        exp[i] = v
        log[v] = i
        v = _raw_mul(v, primitive, p, a, modulus)
    exp[q - 1 :] = exp[: q - 1]
    digits = np.array([[(x // p**i) % p for i in range(a)] for x in range(q)], dtype=np.int64)
    add_table = None
    if a > 1 and p != 2 and q <= _ADD_TABLE_MAX_Q:
        add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ (
            p ** np.arange(a, dtype=np.int64)
        )
    for arr in (exp, log, digits):
        arr.setflags(write=False)
    if add_table is not None:
        add_table.setflags(write=False)
    return FiniteField(p, a, modulus, int(primitive), exp, log, digits, add_table)


def field_from_descriptor(desc: dict) -> FiniteField:
    return make_field(desc["p"], desc["a"], desc["modulus"], desc.get("primitive"))


def field_arith(field: FiniteField, op: str, *operands: int) -> int:
    """Dispatch ``add | sub | mul | inv | pow`` by name."""
    ops = {
        "add": field.add,
        "sub": field.sub,
        "mul": field.mul,
        "inv": field.inv,
        "pow": field.pow,
        "div": field.div,
        "neg": field.neg,
    }
    try:
        fn = ops[op]
    except KeyError:
        raise FieldError(f"unknown operation {op!r}") from None
    return fn(*operands)


# -- subgroups --------------------------------------------------------------


def mult_subgroup_cosets(
    field: FiniteField, order: int, coset_reps: Sequence[int] = (1,)
) -> list[list[int]]:
    """Cosets ``rep * H`` of the multiplicative subgroup H of the given order.

    Each coset lists ``rep * h^i`` for ``i = 0..order-1`` where ``h`` generates H.
    """
    q = field.q
    if order < 1 or (q - 1) % order:
        raise FieldError(f"subgroup order {order} does not divide q-1={q - 1}")
    gen = field.alpha((q - 1) // order)
    subgroup = [field.pow(gen, i) for i in range(order)]
    cosets = []
    for rep in coset_reps:
        if rep == 0:
            raise FieldError("coset representative must be nonzero")
        cosets.append([field.mul(rep, h) for h in subgroup])
    return cosets


def additive_cosets(
    field: FiniteField, subgroup: Sequence[int], coset_reps: Sequence[int] = (0,)
) -> list[list[int]]:
    sub = list(subgroup)
    return [[field.add(rep, h) for h in sub] for rep in coset_reps]


def is_additive_subgroup(field: FiniteField, elements: Iterable[int]) -> bool:
    s = set(elements)
    if 0 not in s:
        return False
    return all(field.sub(x, y) in s for x in s for y in s)


def trace_kernel(field: FiniteField) -> list[int]:
    """Elements with ``x^q0 + x = 0`` where ``q = q0^2``; canonical order."""
    if field.a % 2:
        raise FieldError(f"GF({field.q}) is not a square-order field")
    q0 = field.p ** (field.a // 2)
    return [x for x in field.elements() if field.add(field.pow(x, q0), x) == 0]


def norm_to_subfield(field: FiniteField, x: int) -> int:
    """``x^(q0+1)``, the norm from GF(q0^2) down to GF(q0)."""
    q0 = field.p ** (field.a // 2)
    return field.pow(x, q0 + 1)


# -- univariate polynomials ---------------------------------------------------


class Poly:
    """Univariate polynomial over a finite field, coefficients low-to-high."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Iterable[int]):
        self.field = field
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)})"

    def __add__(self, other: Poly) -> Poly:
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(F, [F.add(x, y) for x, y in zip(a, b)])

    def __neg__(self) -> Poly:
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        F = self.field
        if isinstance(other, int):
            return Poly(F, [F.mul(c, other) for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly(F, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    out[i + j] = F.add(out[i + j], F.mul(u, v))
        return Poly(F, out)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc


def eval_poly(f: Poly, x: int, field: FiniteField | None = None) -> int:
    """Horner evaluation of ``f`` at ``x``."""
    if field is not None and field != f.field:
        raise FieldError("polynomial and point live in different fields")
    f.field._check(x)
    return f(x)


def interpolate(field: FiniteField, points: Sequence[tuple[int, int]]) -> Poly:
    """Lagrange interpolation through ``(x, v)`` pairs with distinct ``x``."""
    if not points:
        raise FieldError("interpolation needs at least one point")
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise FieldError("duplicate abscissae in interpolation")
    result = Poly(field, [])
    for i, (xi, vi) in enumerate(points):
        if vi == 0:
            continue
        basis = Poly(field, [1])
        denom = 1
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * Poly(field, [field.neg(xj), 1])
                denom = field.mul(denom, field.sub(xi, xj))
        result = result + basis * field.div(vi, denom)
    return result
