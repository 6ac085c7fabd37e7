"""Arithmetic in GF(p^f) and linear algebra over it.

Elements are plain integers in ``[0, q)``. The base-``p`` digits of an
element are the coefficients of its polynomial representative, digit ``i``
being the coefficient of ``X^i``. Matrices are numpy integer arrays whose
entries follow the same encoding.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

MAX_ORDER = 1 << 20

# Lexicographically-first monic irreducible polynomial (little-endian
# coefficients) for each prime power p^f <= 512 with f >= 2.
DEFAULT_MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 1, 0, 0, 0, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (5, 3): (1, 1, 0, 1),
    (7, 2): (1, 0, 1),
    (7, 3): (2, 0, 0, 1),
    (11, 2): (1, 0, 1),
    (13, 2): (2, 0, 1),
    (17, 2): (3, 0, 1),
    (19, 2): (1, 0, 1),
}


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, f)`` with ``q == p**f``; raise if q is not a prime power."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    f, m = 0, q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, f


# -- polynomials over GF(p), little-endian coefficient lists -----------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], m: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    lead_inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    for top in range(len(a) - 1, dm - 1, -1):
        c = a[top] * lead_inv % p
        if c:
            s = top - dm
            for i, mi in enumerate(m):
                a[s + i] = (a[s + i] - c * mi) % p
    return _trim(a[:dm])


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(n)]
    return _trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _x_power_mod(e: int, m: Sequence[int], p: int) -> list[int]:
    """X^e mod m by square-and-multiply."""
    result: list[int] = [1]
    base = _poly_mod([0, 1], m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p).

    Degree <= 3: no root in GF(p). Otherwise ``gcd(X^(p^i) - X, m) == 1`` for
    every ``1 <= i <= deg/2``.
    """
    m = list(modulus)
    f = len(m) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    if f <= 3:
        for x in range(p):
            if sum(c * pow(x, i, p) for i, c in enumerate(m)) % p == 0:
                return False
        return True
    for i in range(1, f // 2 + 1):
        g = _poly_sub(_x_power_mod(p ** i, m, p), [0, 1], p)
        if len(_poly_gcd(m, g, p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^f) defined by an explicit monic irreducible modulus."""

    p: int
    f: int
    modulus: tuple[int, ...] = field(compare=True)

    @property
    def q(self) -> int:
        return self.p ** self.f

    def __repr__(self) -> str:
        return f"GF({self.q})"

    # -- encoding --------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        p = self.p
        return [(a // p ** i) % p for i in range(self.f)]

    def from_digits(self, ds: Sequence[int]) -> int:
        p = self.p
        return sum((d % p) * p ** i for i, d in enumerate(ds))

    def _check(self, *xs: int) -> None:
        for x in xs:
            if not 0 <= x < self.q:
                raise FieldError(f"{x} is not an element of {self!r}")

    # -- schoolbook arithmetic ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.f == 1:
            return (a + b) % self.p
        return self.from_digits([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a: int) -> int:
        self._check(a)
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.f == 1:
            return a * b % self.p
        prod = _poly_mul(self.digits(a), self.digits(b), self.p)
        return self.from_digits(_poly_mod(prod, self.modulus, self.p))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise FieldError("zero has no inverse")
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    # -- lookup tables (built from the schoolbook product) ---------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        if self.f == 1:
            r = np.arange(q)
            return (r[:, None] + r[None, :]) % q
        t = np.zeros((q, q), dtype=np.int64)
        digs = [self.digits(a) for a in range(q)]
        for a in range(q):
            for b in range(q):
                t[a, b] = self.from_digits([x + y for x, y in zip(digs[a], digs[b])])
        return t

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        t = np.zeros((q, q), dtype=np.int64)
        for a in range(1, q):
            for b in range(a, q):
                t[a, b] = t[b, a] = self.mul(a, b)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.neg(a) for a in range(self.q)], dtype=np.int64)

    @cached_property
    def inv_table(self) -> np.ndarray:
        return np.array([0] + [self.inv(a) for a in range(1, self.q)], dtype=np.int64)

    @cached_property
    def sub_table(self) -> np.ndarray:
        return self.add_table[:, self.neg_table]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # -- vectorised helpers -----------------------------------------------

    def vadd(self, x, y):
        return self.add_table[x, y]

    def vsub(self, x, y):
        return self.sub_table[x, y]

    def vmul(self, x, y):
        return self.mul_table[x, y]

    def dot(self, x, y) -> int:
        acc = 0
        for a, b in zip(x, y):
            acc = self.add_table[acc, self.mul_table[a, b]]
        return int(acc)

    def matmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product over the field; works on 2-d arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for i in range(a.shape[1]):
            out = self.add_table[out, self.mul_table[a[:, i][:, None], b[i][None, :]]]
        return out


def make_field(p: int, f: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build and validate GF(p^f).

    Without an explicit modulus the built-in table is used (``X`` for f = 1).
    """
    if not is_prime(p):
        raise FieldError(f"p={p} is not prime")
    if f < 1:
        raise FieldError(f"extension degree f={f} must be >= 1")
    if p ** f > MAX_ORDER:
        raise FieldError(f"q={p ** f} exceeds the supported order {MAX_ORDER}")
    if modulus is None:
        if f == 1:
            modulus = (0, 1)
        elif (p, f) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, f)]
        else:
            raise FieldError(f"no built-in modulus for GF({p}^{f}); pass one explicitly")
    mod = tuple(int(c) for c in modulus)
    if len(mod) != f + 1:
        raise FieldError(f"modulus {list(mod)} does not have degree {f}")
    if any(not 0 <= c < p for c in mod):
        raise FieldError(f"modulus coefficients must lie in [0, {p})")
    if mod[-1] != 1:
        raise FieldError(f"modulus {list(mod)} is not monic")
    if not is_irreducible(mod, p):
        raise FieldError(f"modulus {list(mod)} is reducible over GF({p})")
    return FieldSpec(p, f, mod)


def field_of_order(q: int) -> FieldSpec:
    p, f = prime_power(q)
    return make_field(p, f)


def element_ops(field: FieldSpec, a: int, b: int | None, op: str) -> int:
    """Dispatch a named operation: add, sub, mul, div, inv or pow.

    For ``pow`` the second operand is the integer exponent.
    """
    if op == "add":
        return field.add(a, b)
    if op == "sub":
        return field.sub(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "div":
        return field.div(a, b)
    if op == "inv":
        return field.inv(a)
    if op == "pow":
        return field.pow(a, b)
    raise FieldError(f"unknown operation {op!r}")


def rref(field: FieldSpec, m) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row-echelon form over the field.

    Pivots are taken leftmost column first, topmost available row first.
    Returns ``(reduced, rank, pivot_columns)``; ``reduced`` has the same shape
    as the input with the zero rows at the bottom.
    """
    a = np.array(m, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise FieldError("rref expects a 2-d matrix")
    rows, cols = a.shape
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        s = r + int(nz[0])
        if s != r:
            a[[r, s]] = a[[s, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = add[a[i], mul[neg[a[i, c]], a[r]]]
        pivots.append(c)
        r += 1
    return a, r, pivots


def rank(field: FieldSpec, m) -> int:
    return rref(field, m)[1]


def nullspace(field: FieldSpec, m) -> np.ndarray:
    """Basis (as rows) of ``{x : M x = 0}``."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    red, r, pivots = rref(field, m)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = field.neg_table[red[row, fc]]
    return basis


def solve_left(field: FieldSpec, rows: np.ndarray, target) -> np.ndarray | None:
    """Coefficients ``x`` with ``x @ rows == target``, or None if unsolvable.

    ``rows`` must be linearly independent.
    """
    rows = np.asarray(rows, dtype=np.int64)
    target = np.asarray(target, dtype=np.int64)
    k = rows.shape[0]
    aug = np.concatenate([rows.T, target[:, None]], axis=1)
    red, r, pivots = rref(field, aug)
    if k in pivots:
        return None
    if r != k:
        raise FieldError("rows are not linearly independent")
    x = np.zeros(k, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = red[row, k]
    return x


def canonical(field: FieldSpec, v) -> tuple[int, ...]:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    v = [int(x) for x in v]
    for x in v:
        if x:
            s = field.inv_table[x]
            return tuple(int(field.mul_table[s, y]) for y in v)
    raise FieldError("the zero vector has no projective point")
