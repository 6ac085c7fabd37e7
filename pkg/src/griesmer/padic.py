"""p-adic tools: digit sums, Kummer valuations, the binomial sums c(r,s;1),
Galois rings GR(p^N, f) and Teichmueller lifts.

The unramified ring of integers over Z_p with residue field GF(q) is modelled
at finite precision N by ``(Z/p^N)[X]/(m(X))`` where ``m`` is the field modulus
read as an integer polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Sequence

from .finite_field import FieldSpec, make_field


class PadicError(ValueError):
    pass


def digit_sum(n: int, p: int) -> int:
    if n < 0:
        raise PadicError("digit_sum needs n >= 0")
    s = 0
    while n:
        n, r = divmod(n, p)
        s += r
    return s


def nu_int(n: int, p: int) -> int:
    """Valuation of a nonzero integer."""
    if n == 0:
        raise PadicError("valuation of 0 is unbounded")
    n, e = abs(n), 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def nu_binom(n: int, m: int, p: int) -> int:
    """nu_p(binom(n, m)) by Kummer's theorem."""
    if not 0 <= m <= n:
        raise PadicError(f"need 0 <= m <= n (got n={n}, m={m})")
    num = digit_sum(m, p) + digit_sum(n - m, p) - digit_sum(n, p)
    v, r = divmod(num, p - 1)
    assert r == 0, (n, m, p)
    return v


def carries(x: int, y: int, p: int) -> int:
    """Number of carries when adding x and y in base p."""
    c = count = 0
    while x or y or c:
        s = x % p + y % p + c
        c = 1 if s >= p else 0
        count += c
        x //= p
        y //= p
    return count


def carry_bound_check(x: int, y: int, z: int, p: int, mode: str = "v1", n: int | None = None) -> bool:
    """Check the carry lower bounds used in the valuation arguments.

    ``v1``: with nu_p(x) = m and nu_p(z) = n >= m, nu_p(binom(z, x)) >= n - m.
    ``v2``: if the low n digits of x dominate those of z (strictly at digit 0),
    nu_p(binom(z, x)) >= n.
    """
    if z != x + y or min(x, y, z) < 0:
        raise PadicError("hypothesis z = x + y with nonnegative terms violated")
    actual = nu_binom(z, x, p)
    if mode == "v1":
        if x == 0 or z == 0:
            raise PadicError("v1 needs x, z > 0")
        lo, hi = nu_int(x, p), nu_int(z, p)
        if hi < lo:
            raise PadicError("v1 needs nu_p(z) >= nu_p(x)")
        return actual >= hi - lo
    if mode == "v2":
        if n is None or n < 1:
            raise PadicError("v2 needs a split parameter n >= 1")
        xs = [(x // p ** i) % p for i in range(n)]
        zs = [(z // p ** i) % p for i in range(n)]
        if not (xs[0] > zs[0] and all(a >= b for a, b in zip(xs[1:], zs[1:]))):
            raise PadicError("v2 digit hypotheses violated")
        return actual >= n
    raise PadicError(f"unknown mode {mode!r}")


def c_sum(r: int, s: int, q: int) -> int:
    """c(r, s; 1) = sum of binom(rq, a(q-1) + s) over a >= 0, exactly."""
    if not (1 <= r <= q - 1 and 1 <= s <= q - 1):
        raise PadicError(f"need 1 <= r, s <= q-1 (got r={r}, s={s}, q={q})")
    top = r * q
    return sum(comb(top, i) for i in range(s, top + 1, q - 1))


def expansion_coefficient(r: int, s: int, q: int) -> int:
    """c(r, s; 1) without the boundary binomial binom(rq, rq).

    This is the coefficient of X^(..) Y^s in (X+Y)^(rq) - X^r - Y^r once
    X^q = X and Y^q = Y are used; it differs from :func:`c_sum` only when
    s == r.
    """
    return c_sum(r, s, q) - (1 if s == r else 0)


@dataclass(frozen=True)
class Valuation:
    value: int
    saturated: bool = False

    def __post_init__(self):
        if self.value < 0:
            raise PadicError("valuation must be >= 0")


@dataclass(frozen=True)
class GaloisRingSpec:
    """GR(p^N, f) = (Z/p^N Z)[X] / (m(X)) with m the field modulus lifted."""

    p: int
    f: int
    N: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p ** self.N

    @property
    def q(self) -> int:
        return self.p ** self.f

    @cached_property
    def field(self) -> FieldSpec:
        return make_field(self.p, self.f, [c % self.p for c in self.modulus])

    def element(self, coeffs: Sequence[int]) -> "GaloisRingElement":
        c = [int(x) % self.order for x in coeffs]
        if len(c) > self.f:
            c = _reduce(c, self)
        c += [0] * (self.f - len(c))
        return GaloisRingElement(self, tuple(c))

    def zero(self) -> "GaloisRingElement":
        return GaloisRingElement(self, (0,) * self.f)

    def one(self) -> "GaloisRingElement":
        return self.element([1])

    def scalar(self, n: int) -> "GaloisRingElement":
        return self.element([n])

    def lift(self, x: int) -> "GaloisRingElement":
        """Coefficient-wise lift of a field element (not the Teichmueller lift)."""
        return self.element(self.field.digits(x))

    def reduce(self, a: "GaloisRingElement") -> int:
        """Image in the residue field GF(q)."""
        return self.field.from_digits([c % self.p for c in a.coeffs])


def galois_ring(field: FieldSpec, N: int) -> GaloisRingSpec:
    if N < 1:
        raise PadicError("precision N must be >= 1")
    return GaloisRingSpec(field.p, field.f, N, tuple(field.modulus))


def _reduce(c: list[int], gr: GaloisRingSpec) -> list[int]:
    mod, f, P = gr.modulus, gr.f, gr.order
    c = list(c)
    for top in range(len(c) - 1, f - 1, -1):
        t = c[top] % P
        if t:
            s = top - f
            for i in range(f):
                c[s + i] = (c[s + i] - t * mod[i]) % P
        c[top] = 0
    return [x % P for x in c[:f]]


@dataclass(frozen=True)
class GaloisRingElement:
    ring: GaloisRingSpec
    coeffs: tuple[int, ...]

    def _same(self, other: "GaloisRingElement") -> None:
        if other.ring != self.ring:
            raise PadicError("Galois ring mismatch")

    def __add__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        self._same(other)
        P = self.ring.order
        return GaloisRingElement(self.ring, tuple((a + b) % P for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "GaloisRingElement":
        P = self.ring.order
        return GaloisRingElement(self.ring, tuple((-a) % P for a in self.coeffs))

    def __sub__(self, other: "GaloisRingElement") -> "GaloisRingElement":
        return self + (-other)

    def __mul__(self, other) -> "GaloisRingElement":
        if isinstance(other, int):
            P = self.ring.order
            return GaloisRingElement(self.ring, tuple(a * other % P for a in self.coeffs))
        self._same(other)
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return GaloisRingElement(self.ring, tuple(_reduce(prod, self.ring)))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GaloisRingElement":
        if e < 0:
            raise PadicError("negative powers are not supported")
        result, base = self.ring.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nu(self) -> Valuation:
        """Largest j <= N with every coefficient divisible by p^j."""
        N, p = self.ring.N, self.ring.p
        if self.is_zero():
            return Valuation(N, True)
        return Valuation(min(nu_int(c, p) for c in self.coeffs if c), False)


def teichmuller(x: int, gr: GaloisRingSpec) -> GaloisRingElement:
    """The unique y with y^q = y and y = x mod p, by Frobenius iteration."""
    if not 0 <= x < gr.q:
        raise PadicError(f"{x} is not an element of GF({gr.q})")
    y = gr.lift(x)
    for _ in range(gr.N + 1):
        nxt = y ** gr.q
        if nxt == y:
            return y
        y = nxt
    raise AssertionError("Teichmueller iteration did not converge")


def teichmuller_table(gr: GaloisRingSpec) -> list[GaloisRingElement]:
    return [teichmuller(x, gr) for x in range(gr.q)]


def schur(u: Sequence[GaloisRingElement], v: Sequence[GaloisRingElement]) -> list[GaloisRingElement]:
    if len(u) != len(v):
        raise PadicError("Schur product needs equal lengths")
    return [a * b for a, b in zip(u, v)]


def schur_power(u: Sequence[GaloisRingElement], r: int) -> list[GaloisRingElement]:
    return [a ** r for a in u]


def sigma(u: Sequence[GaloisRingElement], gr: GaloisRingSpec) -> GaloisRingElement:
    acc = gr.zero()
    for a in u:
        acc = acc + a
    return acc


def gr_ops(a, b, op: str, gr: GaloisRingSpec | None = None):
    """Named dispatch: add, mul, schur (vectors), sigma (vector), nu."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "schur":
        return schur(a, b)
    if op == "sigma":
        return sigma(a, gr or a[0].ring)
    if op == "nu":
        return a.nu()
    raise PadicError(f"unknown operation {op!r}")


def lift_vector(x: Sequence[int], gr: GaloisRingSpec, table=None) -> list[GaloisRingElement]:
    table = table or teichmuller_table(gr)
    return [table[v] for v in x]


def expansion_check(x: Sequence[int], y: Sequence[int], r: int, gr: GaloisRingSpec) -> bool:
    """Compare both sides of the Schur-power expansion of T(x+y) modulo pq.

    Left: T(x+y)^(r). Right: X^(r) + Y^(r) + sum_i c(r,i) X^(e_i) Y^(i) with
    e_i = r - i for i < r and q - 1 + r - i otherwise, the exact coefficients
    replaced by :func:`expansion_coefficient` values.
    """
    q, p = gr.q, gr.p
    if not 1 <= r <= q - 1:
        raise PadicError("need 1 <= r <= q-1")
    if gr.order < p * q:
        raise PadicError("precision below pq")
    if len(x) != len(y):
        raise PadicError("vectors must have equal length")
    field = gr.field
    table = teichmuller_table(gr)
    X = lift_vector(x, gr, table)
    Y = lift_vector(y, gr, table)
    lhs = schur_power(lift_vector([field.add(a, b) for a, b in zip(x, y)], gr, table), r)
    rhs = [a + b for a, b in zip(schur_power(X, r), schur_power(Y, r))]
    for i in range(1, q):
        ex = r - i if i < r else q - 1 + r - i
        coeff = expansion_coefficient(r, i, q)
        term = schur(schur_power(X, ex), schur_power(Y, i))
        rhs = [u + coeff * t for u, t in zip(rhs, term)]
    mod = p * q
    return all(all((a - b) % mod == 0 for a, b in zip(u.coeffs, v.coeffs))
               for u, v in zip(lhs, rhs))
