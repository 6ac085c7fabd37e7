"""Structured bases of Griesmer codes.

For a [g_q(k,d), k, d] Griesmer code with q^e | d we build a generator matrix
whose first min(e+1, k) rows span a constant-weight-d subcode and whose
(k-1)-row subsets each span a [g_q(k-1,d), k-1, d] Griesmer subcode.

Construction: take a minimum-weight word a_1 and a supplementary Griesmer
subcode C' of it. Build the basis of Res(C, a_1) recursively and pull every
residual row back into C' through the puncturing map, which is a bijection on
C'. The columns outside supp(a_1) then carry the residual's structure, and
the columns killed by C' are the ceil(d / q^(k-1)) multiples of e_1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .finite_field import canonical, rank, solve_left
from .linear_code import (
    CodeError,
    LinearCode,
    ceil_div,
    griesmer_bound,
    lift_min_weight,
    preimages,
    residual,
    supplementary_subcode,
    weight,
)


class CertificateError(CodeError):
    """A basis certificate clause does not hold."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"[{clause}] {message}")
        self.clause = clause


def min_weight_codeword(code: LinearCode) -> np.ndarray:
    """Lexicographically first (message order) codeword of minimum weight."""
    return code.min_weight_codeword()


def q_exponent(q: int, d: int) -> int:
    """Largest e with q^e | d."""
    e = 0
    while d % q ** (e + 1) == 0:
        e += 1
    return e


@dataclass
class BasisCertificate:
    rows: np.ndarray
    q: int
    k: int
    d: int
    e: int
    gamma: int
    prefix: list[dict] = dc_field(default_factory=list)
    omissions: list[dict] = dc_field(default_factory=list)
    column_ledger: list[int] = dc_field(default_factory=list)
    other_columns: int = 0
    steps: list[dict] = dc_field(default_factory=list)

    def report(self) -> str:
        lines = [f"basis certificate: q={self.q} k={self.k} d={self.d} e={self.e} "
                 f"gamma={self.gamma}"]
        for c in self.prefix:
            lines.append(f"  prefix rows 1..{c['rows']}: length {c['length']} "
                         f"weights {c['weights']} ok")
        for c in self.omissions:
            lines.append(f"  omit row {c['omitted']}: [{c['length']},{self.k - 1},{c['d']}] "
                         f"Griesmer ok")
        lines.append("  columns proportional to e_j: "
                     + " ".join(str(c) for c in self.column_ledger)
                     + f" (other {self.other_columns})")
        for s in self.steps:
            lines.append(f"  step depth {s['depth']}: wt(a1)={s['a1_weight']} "
                         f"residual [{s['res_n']},{s['res_k']},{s['res_d']}] "
                         f"lift weight {s['lift_weight']} "
                         f"({s['min_weight_preimages']} of {s['q']} preimages minimal)")
        return "\n".join(lines)


def _construct_rows(code: LinearCode, steps: list[dict], depth: int = 0) -> np.ndarray:
    field = code.field
    a1 = code.min_weight_codeword()
    if code.k == 1:
        return a1[None, :]
    sup = supplementary_subcode(code, a1)
    res = residual(code, a1)
    if res.k != code.k - 1 or not res.is_griesmer():
        raise CodeError(f"residual at depth {depth} is not a [.,{code.k - 1},.] Griesmer code")
    res_rows = _construct_rows(res, steps, depth + 1)

    lifted = lift_min_weight(code, a1, res_rows[0], res)
    pre = preimages(code, a1, res_rows[0], res)
    steps.insert(0, {
        "depth": depth, "a1_weight": weight(a1),
        "res_n": res.n, "res_k": res.k, "res_d": res.d,
        "lift_weight": weight(lifted),
        "min_weight_preimages": sum(1 for b in pre if weight(b) == code.d),
        "q": code.q,
        "supplement_length": int(sup.any(axis=0).sum()),
    })

    pos = {c: j for j, c in enumerate(code.origin)}
    cols = [pos[c] for c in res.origin]
    restricted = sup[:, cols]
    rows = [a1]
    for r in res_rows:
        x = solve_left(field, restricted, r)
        if x is None:
            raise CodeError("residual row has no preimage in the supplementary subcode")
        rows.append(field.matmul(x[None, :], sup)[0])
    return np.array(rows, dtype=np.int64)


def construct_basis(code: LinearCode) -> tuple[np.ndarray, BasisCertificate]:
    if not code.is_griesmer():
        raise CodeError(f"{code!r} is not a Griesmer code")
    steps: list[dict] = []
    rows = _construct_rows(code, steps)
    cert = verify_basis(code, rows)
    cert.steps = steps
    return rows, cert


def _span_code(code: LinearCode, rows: np.ndarray) -> LinearCode:
    return LinearCode(code.field, rows, allow_zero_columns=True)


def verify_basis(code: LinearCode, rows) -> BasisCertificate:
    """Re-derive every certificate clause from the rows; raise on the first failure."""
    rows = np.asarray(rows, dtype=np.int64)
    field, q, k = code.field, code.q, code.k
    if rows.ndim != 2 or rows.shape != (k, code.n):
        raise CertificateError("basis", f"expected a {k} x {code.n} matrix")
    if rank(field, rows) != k:
        raise CertificateError("basis", "rows are not linearly independent")
    for i, r in enumerate(rows):
        if not code.contains(r):
            raise CertificateError("basis", f"row {i + 1} is not a codeword")
    d = code.d
    e = q_exponent(q, d)
    gam = ceil_div(d, q ** (k - 1))
    cert = BasisCertificate(rows=rows, q=q, k=k, d=d, e=e, gamma=gam)

    for j in range(1, min(e + 1, k) + 1):
        sub = _span_code(code, rows[:j])
        length = sub.effective_length()
        ws = sub.weights
        if ws != [d]:
            raise CertificateError(f"prefix[{j}]", f"rows 1..{j} have weights {ws}, expected {{{d}}}")
        if length != griesmer_bound(q, j, d):
            raise CertificateError(f"prefix[{j}]", f"effective length {length} != g_q({j},{d})")
        cert.prefix.append({"rows": j, "length": length, "weights": ws})

    if k >= 2:
        target = griesmer_bound(q, k - 1, d)
        for i in range(k):
            sub = _span_code(code, np.delete(rows, i, axis=0))
            length = sub.effective_length()
            if length != target or sub.d != d:
                raise CertificateError(
                    f"omission[{i + 1}]",
                    f"rows without {i + 1} span [{length},{k - 1},{sub.d}], "
                    f"expected [{target},{k - 1},{d}]")
            cert.omissions.append({"omitted": i + 1, "length": length, "d": sub.d})

    # columns of the new generator matrix that are multiples of a unit vector
    units = [tuple(1 if t == j else 0 for t in range(k)) for j in range(k)]
    counts = [0] * k
    other = 0
    for c in range(code.n):
        pt = canonical(field, rows[:, c])
        if pt in units:
            counts[units.index(pt)] += 1
        else:
            other += 1
    for j, c in enumerate(counts):
        if c != gam:
            raise CertificateError(f"ledger[{j + 1}]",
                                   f"{c} columns proportional to e_{j + 1}, expected {gam}")
    cert.column_ledger = counts
    cert.other_columns = other
    return cert

