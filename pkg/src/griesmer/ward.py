"""Deciding p^e-divisibility of a code from Teichmueller lifts of a basis.

For an additive spanning set {lambda * b_i}, p^e divides every weight iff

    e <= sum(S_p(r_i)) / (p - 1) - f + nu_p(sigma(T(b_1)^(r_1) o ... o T(b_m)^(r_m)))

for every exponent tuple with sum(r_i) = 0 mod (q - 1). The default *folded*
enumeration uses one exponent in [0, q-1] per basis row; *bounded* mode walks
all multisets of up to L (element, exponent) pairs of the spanning set and is
kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor
from typing import Iterator, Sequence

import numpy as np

from .linear_code import CodeError, LinearCode
from .padic import GaloisRingSpec, digit_sum, galois_ring, teichmuller_table


class PrecisionError(CodeError):
    pass


@dataclass(frozen=True)
class ExponentTuple:
    """Exponents r_1..r_m in [0, q-1], not all zero, summing to 0 mod q-1."""

    exponents: tuple[int, ...]
    p: int
    q: int

    def __post_init__(self):
        rs = self.exponents
        if not rs or not any(rs):
            raise ValueError("exponent tuple must have a nonzero entry")
        if any(not 0 <= r <= self.q - 1 for r in rs):
            raise ValueError(f"exponents must lie in [0, {self.q - 1}]")
        if sum(rs) % (self.q - 1):
            raise ValueError(f"exponents must sum to 0 mod {self.q - 1}")

    @property
    def digit_total(self) -> int:
        return sum(digit_sum(r, self.p) for r in self.exponents)


@dataclass
class WardResult:
    exponent: int
    e_max: int
    mode: str
    tuples_checked: int
    witness: tuple | None = None
    witness_bound: Fraction | None = None


class _Evaluator:
    """Teichmueller powers of the basis columns, grouped by distinct column."""

    def __init__(self, code: LinearCode, rows: np.ndarray, gr: GaloisRingSpec):
        self.gr = gr
        self.p, self.f, self.q = gr.p, gr.f, gr.q
        table = teichmuller_table(gr)
        self.powers = [[None] + [t ** r for r in range(1, self.q)] for t in table]
        cols: dict[tuple[int, ...], int] = {}
        for c in np.asarray(rows, dtype=np.int64).T:
            key = tuple(int(x) for x in c)
            cols[key] = cols.get(key, 0) + 1
        self.columns = list(cols.items())

    def sigma(self, exponents: Sequence[int]):
        gr = self.gr
        acc = gr.zero()
        for col, mult in self.columns:
            term = None
            for v, r in zip(col, exponents):
                if r == 0:
                    continue
                if v == 0:
                    term = gr.zero()
                    break
                term = self.powers[v][r] if term is None else term * self.powers[v][r]
            if term is not None and not term.is_zero():
                acc = acc + term * mult
        return acc

    def bound(self, digit_total: int, sig) -> Fraction | None:
        """sum S_p / (p-1) - f + nu(sigma); None when nu is saturated."""
        v = sig.nu()
        if v.saturated:
            return None
        return Fraction(digit_total, self.p - 1) - self.f + v.value


def spanning_rows(rows: np.ndarray, field, alpha: int = 0) -> np.ndarray:
    """Replace the first row by a_1 + alpha * a_2."""
    rows = np.array(rows, dtype=np.int64)
    if alpha and rows.shape[0] >= 2:
        rows[0] = field.add_table[rows[0], field.mul_table[alpha, rows[1]]]
    return rows


def ward_condition(code: LinearCode, rows, e: int, t: ExponentTuple, gr: GaloisRingSpec) -> bool:
    """Whether one exponent tuple satisfies the inequality at level e."""
    rows = np.asarray(rows, dtype=np.int64)
    if len(t.exponents) != rows.shape[0]:
        raise CodeError("tuple length must match the number of rows")
    threshold = Fraction(e + gr.f) - Fraction(t.digit_total, gr.p - 1)
    tau = -floor(-threshold)
    if tau > gr.N:
        raise PrecisionError(f"precision N={gr.N} below the required threshold {tau}")
    ev = _Evaluator(code, rows, gr)
    b = ev.bound(t.digit_total, ev.sigma(t.exponents))
    if b is None:
        return True
    return e <= b


def folded_tuples(q: int, k: int) -> Iterator[tuple[int, ...]]:
    for rs in product(range(q), repeat=k):
        if any(rs) and sum(rs) % (q - 1) == 0:
            yield rs


def default_basis(code: LinearCode) -> np.ndarray:
    if code.is_griesmer():
        from .basis import construct_basis
        return construct_basis(code)[0]
    return np.array(code.gen)


def max_divisor_exponent(code: LinearCode, e_max: int = 8, mode: str = "folded",
                         max_len: int | None = None, alpha: int = 0,
                         rows=None) -> WardResult:
    """Largest e <= e_max for which every tuple satisfies the criterion."""
    if e_max < 0:
        raise CodeError("e_max must be >= 0")
    field = code.field
    if not 0 <= alpha < field.q:
        raise CodeError(f"alpha must be a field element of GF({field.q})")
    rows = default_basis(code) if rows is None else np.asarray(rows, dtype=np.int64)
    rows = spanning_rows(rows, field, alpha)
    gr = galois_ring(field, e_max + field.f)
    if mode == "folded":
        return _folded(code, rows, gr, e_max)
    if mode == "bounded":
        return _bounded(code, rows, gr, e_max, max_len or 2 * code.k)
    raise CodeError(f"unknown mode {mode!r}")


def _folded(code, rows, gr, e_max) -> WardResult:
    ev = _Evaluator(code, rows, gr)
    best, witness, wbound, count = e_max, None, None, 0
    for rs in folded_tuples(gr.q, rows.shape[0]):
        count += 1
        digits = sum(digit_sum(r, gr.p) for r in rs)
        b = ev.bound(digits, ev.sigma(rs))
        if b is None:
            continue
        level = max(floor(b), 0)
        if level < best:
            best, witness, wbound = level, rs, b
    return WardResult(best, e_max, "folded", count, witness, wbound)


def _bounded(code, rows, gr, e_max, max_len) -> WardResult:
    """Multisets of (scalar, row, exponent) triples of size 1..max_len.

    Per column, the Schur product of Teichmueller powers equals the
    Teichmueller lift of the field product, so each multiset is evaluated
    through field arithmetic and a histogram of lifted values.
    """
    field, q, p = code.field, gr.q, gr.p
    mul = field.mul_table
    table = teichmuller_table(gr)
    k, n = rows.shape
    pow_table = np.ones((q, q), dtype=np.int64)
    for v in range(q):
        for r in range(1, q):
            pow_table[v, r] = field.pow(v, r)
    items = [(lam, i, r) for i in range(k) for lam in field.nonzero() for r in range(1, q)]
    factors = [mul[field.pow(lam, r), pow_table[rows[i], r]] for lam, i, r in items]
    digit = [digit_sum(r, p) for _, _, r in items]
    expo = [r for _, _, r in items]
    state = {"best": e_max, "witness": None, "bound": None, "count": 0}
    cache: dict[bytes, object] = {}

    def evaluate(prod: np.ndarray, chosen: list[int], digits: int):
        state["count"] += 1
        key = np.bincount(prod, minlength=q)
        ck = key.tobytes()
        if ck not in cache:
            acc = gr.zero()
            for v in range(1, q):
                if key[v]:
                    acc = acc + table[v] * int(key[v])
            cache[ck] = acc.nu()
        nu = cache[ck]
        if nu.saturated:
            return
        b = Fraction(digits, p - 1) - gr.f + nu.value
        level = max(floor(b), 0)
        if level < state["best"]:
            state["best"] = level
            state["witness"] = tuple(items[c] for c in chosen)
            state["bound"] = b

    def walk(start: int, prod: np.ndarray, chosen: list[int], digits: int, total: int):
        if chosen and total % (q - 1) == 0:
            evaluate(prod, chosen, digits)
        if len(chosen) == max_len:
            return
        for c in range(start, len(items)):
            chosen.append(c)
            walk(c, mul[prod, factors[c]], chosen, digits + digit[c], total + expo[c])
            chosen.pop()

    walk(0, np.ones(n, dtype=np.int64), [], 0, 0)
    return WardResult(state["best"], e_max, "bounded", state["count"],
                      state["witness"], state["bound"])
