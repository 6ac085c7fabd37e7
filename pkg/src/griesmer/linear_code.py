"""Linear codes over GF(q): weights, Griesmer quantities and derived codes."""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from math import gcd
from typing import Iterator, Sequence

import numpy as np

from .finite_field import FieldSpec, canonical, nullspace, rank, rref, solve_left

DEFAULT_GUARD = 1 << 24
_BLOCK_BITS = 16


class CodeError(ValueError):
    """Invalid code data or a violated precondition of a code operation."""


class GuardExceeded(CodeError):
    """q^k is larger than the enumeration guard."""


def enumeration_guard() -> int:
    raw = os.environ.get("GRIESMER_GUARD")
    if raw is None:
        return DEFAULT_GUARD
    try:
        return int(raw)
    except ValueError:
        raise CodeError(f"GRIESMER_GUARD must be an integer, got {raw!r}") from None


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def griesmer_bound(q: int, k: int, d: int) -> int:
    """g_q(k, d) = sum of ceil(d / q^i) for i < k."""
    if q < 2 or k < 1 or d < 1:
        raise CodeError(f"griesmer_bound needs q >= 2, k >= 1, d >= 1 (got {q}, {k}, {d})")
    return sum(ceil_div(d, q ** i) for i in range(k))


def nu(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is unbounded")
    n, e = abs(n), 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def weight(word) -> int:
    return int(np.count_nonzero(np.asarray(word)))


def support(word) -> list[int]:
    return [int(i) for i in np.nonzero(np.asarray(word))[0]]


class LinearCode:
    """A linear [n, k]_q code given by a rank-k generator matrix.

    ``origin`` records, for derived codes, which coordinate of the parent
    code each column came from.
    """

    def __init__(self, field: FieldSpec, gen, *, allow_zero_columns: bool = False,
                 name: str | None = None, origin: Sequence[int] | None = None):
        g = np.array(gen, dtype=np.int64)
        if g.ndim != 2 or g.shape[0] < 1 or g.shape[1] < 1:
            raise CodeError("generator must be a non-empty k x n matrix")
        if g.min() < 0 or g.max() >= field.q:
            raise CodeError(f"generator entries must lie in [0, {field.q})")
        if rank(field, g) != g.shape[0]:
            raise CodeError("generator rows are linearly dependent")
        if not allow_zero_columns and not g.any(axis=0).all():
            raise CodeError("generator has an all-zero column (code is not full length)")
        g.setflags(write=False)
        self.field = field
        self.gen = g
        self.name = name
        self.origin = tuple(origin) if origin is not None else tuple(range(g.shape[1]))

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def q(self) -> int:
        return self.field.q

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<LinearCode {label}[{self.n},{self.k}]_{self.q}>"

    # -- enumeration -------------------------------------------------------

    def _guard(self) -> None:
        size = self.q ** self.k
        limit = enumeration_guard()
        if size > limit:
            raise GuardExceeded(f"q^k = {size} exceeds the enumeration guard {limit}")

    def _span(self, rows: np.ndarray) -> np.ndarray:
        """All combinations of ``rows`` in lexicographic message order."""
        add, mul = self.field.add_table, self.field.mul_table
        words = np.zeros((1, rows.shape[1]), dtype=np.int64)
        scal = np.arange(self.q)[:, None]
        for row in rows:
            multiples = mul[scal, row[None, :]]
            words = add[words[:, None, :], multiples[None, :, :]].reshape(-1, rows.shape[1])
        return words

    def iter_codewords(self) -> Iterator[np.ndarray]:
        """Yield blocks of codewords; concatenated they follow message order."""
        self._guard()
        q, k = self.q, self.k
        tail = 0
        while tail < k and q ** (tail + 1) <= (1 << _BLOCK_BITS):
            tail += 1
        tail = max(tail, 1)
        head_rows, tail_rows = self.gen[: k - tail], self.gen[k - tail:]
        suffix = self._span(tail_rows)
        if k - tail == 0:
            yield suffix
            return
        add = self.field.add_table
        for prefix in self._span(head_rows):
            yield add[prefix[None, :], suffix]

    @cached_property
    def codewords(self) -> np.ndarray:
        words = np.concatenate(list(self.iter_codewords()), axis=0)
        words.setflags(write=False)
        return words

    def encode(self, message) -> np.ndarray:
        m = np.asarray(message, dtype=np.int64)[None, :]
        return self.field.matmul(m, self.gen)[0]

    def message_of(self, word) -> np.ndarray | None:
        """Message m with ``m G == word``, or None when word is not in C."""
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            raise CodeError(f"word has length {word.shape}, expected {self.n}")
        return solve_left(self.field, self.gen, word)

    def contains(self, word) -> bool:
        return self.message_of(word) is not None

    @cached_property
    def weight_distribution(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for block in self.iter_codewords():
            ws, cs = np.unique(np.count_nonzero(block, axis=1), return_counts=True)
            for w, c in zip(ws.tolist(), cs.tolist()):
                counts[w] = counts.get(w, 0) + c
        return dict(sorted(counts.items()))

    @property
    def weights(self) -> list[int]:
        return [w for w in self.weight_distribution if w]

    @property
    def d(self) -> int:
        return self.weights[0]

    def is_full_length(self) -> bool:
        return bool(self.gen.any(axis=0).all())

    def effective_length(self) -> int:
        return int(self.gen.any(axis=0).sum())

    def is_griesmer(self) -> bool:
        return self.is_full_length() and self.n == griesmer_bound(self.q, self.k, self.d)

    def divisor_and_exponent(self) -> tuple[int, int]:
        g = 0
        for w in self.weights:
            g = gcd(g, w)
        return g, nu(g, self.field.p)

    def words_of_weight(self, w: int) -> np.ndarray:
        words = self.codewords
        return words[np.count_nonzero(words, axis=1) == w]

    def min_weight_codeword(self) -> np.ndarray:
        """The first minimum-weight codeword in message order."""
        d = self.d
        for block in self.iter_codewords():
            hits = np.nonzero(np.count_nonzero(block, axis=1) == d)[0]
            if hits.size:
                return block[hits[0]].copy()
        raise AssertionError("unreachable: minimum weight not attained")

    def subcode(self, rows, name: str | None = None) -> "LinearCode":
        """Subcode spanned by codewords, punctured to its effective length."""
        red, r, _ = rref(self.field, np.asarray(rows, dtype=np.int64))
        return strip_zero_columns(self.field, red[:r], self.origin, name=name)


def strip_zero_columns(field: FieldSpec, gen: np.ndarray, origin: Sequence[int],
                       name: str | None = None) -> LinearCode:
    keep = [j for j in range(gen.shape[1]) if gen[:, j].any()]
    if not keep:
        raise CodeError("derived code has effective length 0")
    return LinearCode(field, gen[:, keep], name=name, origin=[origin[j] for j in keep])


def _row_basis(field: FieldSpec, m: np.ndarray) -> np.ndarray:
    red, r, _ = rref(field, m)
    return red[:r]


def _require_codeword(code: LinearCode, a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    if a.shape != (code.n,):
        raise CodeError(f"codeword must have length {code.n}")
    if not a.any():
        raise CodeError("the zero word is not allowed here")
    if not code.contains(a):
        raise CodeError("word is not a codeword")
    return a


def residual(code: LinearCode, a) -> LinearCode:
    """Res(C, a): C punctured on supp(a); zero columns stripped.

    The returned code's ``origin`` maps its columns to coordinates of C.
    """
    a = _require_codeword(code, a)
    outside = [j for j in range(code.n) if a[j] == 0]
    if not outside:
        raise CodeError("residual of a full-support word is empty")
    basis = _row_basis(code.field, code.gen[:, outside])
    if basis.shape[0] == 0:
        raise CodeError("residual code has dimension 0")
    return strip_zero_columns(code.field, basis, [code.origin[j] for j in outside],
                              name=f"Res({code.name or 'C'})")


def projected(code: LinearCode, a) -> LinearCode:
    """Proj(C, a): C restricted to supp(a)."""
    a = _require_codeword(code, a)
    supp = support(a)
    basis = _row_basis(code.field, code.gen[:, supp])
    return LinearCode(code.field, basis, name=f"Proj({code.name or 'C'})",
                      origin=[code.origin[j] for j in supp])


def point_columns(code: LinearCode, point) -> list[int]:
    """Coordinates whose generator column spans the same point as ``point``."""
    target = canonical(code.field, point)
    return [j for j in range(code.n)
            if code.gen[:, j].any() and canonical(code.field, code.gen[:, j]) == target]


def shortened(code: LinearCode, point) -> LinearCode:
    """Subcode vanishing on the coordinates of ``<point>``, those deleted."""
    point = np.asarray(point, dtype=np.int64)
    if point.shape != (code.k,) or not point.any():
        raise CodeError(f"point must be a nonzero vector of length {code.k}")
    cols = point_columns(code, point)
    if not cols:
        raise CodeError("point does not occur among the generator columns")
    msgs = nullspace(code.field, point[None, :])
    if msgs.shape[0] == 0:
        raise CodeError("shortened subcode has dimension 0")
    rows = code.field.matmul(msgs, code.gen)
    keep = [j for j in range(code.n) if j not in cols]
    return strip_zero_columns(code.field, rows[:, keep], [code.origin[j] for j in keep],
                              name=f"Short({code.name or 'C'})")


@dataclass(frozen=True)
class AgreementProfile:
    """A_alpha = #{i : a_i = alpha * b_i != 0} for a fixed pair (a, b)."""

    counts: dict[int, int] = dc_field(default_factory=dict)
    residual_weight: int = 0
    weight_b: int = 0

    def total(self) -> int:
        return sum(self.counts.values())


def agreement_profile(field: FieldSpec, a, b) -> AgreementProfile:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape != b.shape:
        raise CodeError("words must have the same length")
    if not a.any():
        raise CodeError("a must be nonzero")
    counts = {alpha: 0 for alpha in field.nonzero()}
    for x, y in zip(a.tolist(), b.tolist()):
        if x and y:
            counts[int(field.mul_table[x, field.inv_table[y]])] += 1
    res_w = int(np.count_nonzero(b[a == 0]))
    return AgreementProfile(counts, res_w, weight(b))


def preimages(code: LinearCode, a, target, res: LinearCode | None = None) -> list[np.ndarray]:
    """The q codewords b + lambda*a whose restriction off supp(a) is ``target``.

    ``target`` is a codeword of ``res`` (default ``residual(code, a)``);
    the list is ordered by lambda in element-encoding order.
    """
    a = _require_codeword(code, a)
    res = res if res is not None else residual(code, a)
    target = np.asarray(target, dtype=np.int64)
    if target.shape != (res.n,) or not res.contains(target):
        raise CodeError("target is not a codeword of the residual code")
    pos = {c: j for j, c in enumerate(code.origin)}
    outside = [j for j in range(code.n) if a[j] == 0]
    want = np.zeros(len(outside), dtype=np.int64)
    for t, c in zip(target.tolist(), res.origin):
        want[outside.index(pos[c])] = t
    # Solve m G|outside = want; G|outside has a one-dimensional left kernel (a).
    sub = code.gen[:, outside]
    aug = np.concatenate([sub.T, want[:, None]], axis=1)
    red, r, piv = rref(code.field, aug)
    if code.k in piv:
        raise CodeError("target has no preimage")
    m = np.zeros(code.k, dtype=np.int64)
    for row, pc in enumerate(piv):
        m[pc] = red[row, code.k]
    b = code.encode(m)
    add, mul = code.field.add_table, code.field.mul_table
    return [add[b, mul[lam, a]] for lam in code.field.elements()]


def lift_min_weight(code: LinearCode, a, target, res: LinearCode | None = None) -> np.ndarray:
    """A minimum-weight codeword b with res(b, a) == target (smallest lambda)."""
    d = code.d
    for b in preimages(code, a, target, res):
        if weight(b) == d:
            return b
    raise CodeError("no minimum-weight preimage; code is not Griesmer or inputs are bad")


def supplementary_subcode(code: LinearCode, a) -> np.ndarray:
    """k-1 codewords spanning a [g_q(k-1,d), k-1, d] Griesmer subcode avoiding <a>.

    Candidates are the hyperplanes ``{m : h . m = 0}`` of the message space
    with ``h . m_a != 0``, scanned in canonical-normal order.
    """
    from .geometry import projective_points

    a = _require_codeword(code, a)
    k, d, field = code.k, code.d, code.field
    if k < 2:
        raise CodeError("supplementary subcode needs k >= 2")
    target_len = griesmer_bound(code.q, k - 1, d)
    m_a = code.message_of(a)
    for h in projective_points(field, k):
        if field.dot(h, m_a) == 0:
            continue
        msgs = nullspace(field, np.asarray(h, dtype=np.int64)[None, :])
        rows = field.matmul(msgs, code.gen)
        if int(rows.any(axis=0).sum()) != target_len:
            continue
        sub = LinearCode(field, rows, allow_zero_columns=True)
        if sub.d == d:
            return rows
    raise CodeError("no supplementary Griesmer subcode found; input is not Griesmer")
