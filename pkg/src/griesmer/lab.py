"""Divisibility theorem checks over a corpus, and the counterexample search."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field as dc_field
from math import comb
from pathlib import Path

import numpy as np

from .basis import q_exponent
from .codefile import dumps, write_code
from .constructions import corpus
from .finite_field import field_of_order, is_prime, rank
from .geometry import incidence, projective_points
from .linear_code import CodeError, LinearCode, ceil_div, griesmer_bound, nu

log = logging.getLogger(__name__)

THEOREMS = ("t1.2", "t1.3a", "t1.3b", "t1.5", "t1.6", "conj1")
# a failure of these is a bug; a conj1 failure is a finding
PROVEN = ("t1.2", "t1.3a", "t1.3b", "t1.5", "t1.6")


def ceil_power(p: int, x: int) -> int:
    """ceil(p^x) for an integer exponent that may be negative."""
    return p ** x if x >= 0 else 1


@dataclass
class TheoremVerdict:
    theorem: str
    code: str
    status: str  # pass | fail | skipped
    kind: str = "theorem"
    q: int = 0
    p: int = 0
    f: int = 0
    d: int = 0
    e: int | None = None
    claimed: int | None = None
    observed: int | None = None
    note: str = ""
    witness: list[int] | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return asdict(self)


def _claim(theorem: str, q: int, p: int, f: int, d: int) -> tuple[int | None, int | None, str]:
    """(e, claimed divisor, skip reason) for one theorem."""
    vp = nu(d, p)
    if theorem == "t1.2":
        if f != 1:
            return None, None, "needs a prime field"
        return vp, p ** vp, ""
    if theorem == "t1.3a":
        if d % q:
            return None, None, "needs q | d"
        return q_exponent(q, d), p, ""
    if theorem == "t1.3b":
        if q != 4:
            return None, None, "needs q = 4"
        if vp == 0:
            return None, None, "needs 2 | d"
        return vp, 2 ** (vp - 1), ""
    if theorem == "t1.5":
        e = q_exponent(q, d)
        # the restated form p^floor(nu_p(d)/f) must give the same divisor
        assert p ** e == p ** (vp // f), (q, d)
        return e, p ** e, ""
    if theorem == "t1.6":
        return vp, ceil_power(p, vp - (f - 1) * (q - 2)), ""
    if theorem == "conj1":
        return vp, ceil_power(p, vp - (f - 1)), ""
    raise CodeError(f"unknown theorem {theorem!r}")


def verify_theorem(code: LinearCode, which: str, label: str | None = None) -> TheoremVerdict:
    which = which.lower()
    field = code.field
    q, p, f = field.q, field.p, field.f
    label = label or code.name or "code"
    kind = "conjecture" if which == "conj1" else "theorem"
    d = code.d
    base = dict(theorem=which, code=label, kind=kind, q=q, p=p, f=f, d=d)
    if not code.is_griesmer():
        return TheoremVerdict(status="skipped", note="not a Griesmer code", **base)
    e, claimed, reason = _claim(which, q, p, f, d)
    if claimed is None:
        return TheoremVerdict(status="skipped", note=reason, **base)
    observed = code.divisor_and_exponent()[0]
    if observed % claimed == 0:
        return TheoremVerdict(status="pass", e=e, claimed=claimed, observed=observed, **base)
    bad = [w for w in code.weights if w % claimed]
    wit = code.words_of_weight(bad[0])[0]
    return TheoremVerdict(status="fail", e=e, claimed=claimed, observed=observed,
                          witness=[int(x) for x in wit], **base)


def run_corpus(theorems=THEOREMS, codes: list[LinearCode] | None = None) -> list[TheoremVerdict]:
    codes = corpus() if codes is None else codes
    return [verify_theorem(c, t) for c in codes for t in theorems]


def verdicts_json(verdicts) -> str:
    return json.dumps([v.as_dict() for v in verdicts], indent=2)


# -- search ---------------------------------------------------------------

EXHAUSTIVE_CAP = 10 ** 7


class SearchError(ValueError):
    pass


@dataclass
class SearchTask:
    p: int
    f: int
    k: int
    d: int
    strategy: str = "exhaustive"
    budget: int = 10 ** 6
    seed: int = 0
    recipe: bool = True  # enforce the parameter window of the counterexample hunt
    max_found: int | None = None

    def __post_init__(self):
        if not is_prime(self.p) or self.f < 1 or self.k < 1 or self.d < 1:
            raise SearchError("need prime p, f >= 1, k >= 1, d >= 1")
        if self.strategy not in ("exhaustive", "random"):
            raise SearchError(f"unknown strategy {self.strategy!r}")
        if self.budget < 0:
            raise SearchError("budget must be >= 0")
        if self.recipe:
            q, f = self.q, self.f
            if f == 1 or q < 8:
                raise SearchError(f"q={q} must be a non-prime prime power >= 8")
            if not 4 <= self.k <= q - 1:
                raise SearchError(f"k={self.k} must satisfy 4 <= k <= q-1")
            v = nu(self.d, self.p)
            if not f + 1 <= v < min(f * (q - 2), f * (self.k - 1)):
                raise SearchError(
                    f"nu_p(d)={v} must satisfy {f + 1} <= nu_p(d) < {min(f * (q - 2), f * (self.k - 1))}")

    @property
    def q(self) -> int:
        return self.p ** self.f

    @property
    def n(self) -> int:
        return griesmer_bound(self.q, self.k, self.d)

    @property
    def gamma(self) -> int:
        return ceil_div(self.d, self.q ** (self.k - 1))


@dataclass
class SearchReport:
    task: dict
    strategy: str
    examined: int = 0
    exhausted: bool = False
    candidate_space: int = 0
    found: list[dict] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    def summary(self) -> str:
        lines = [f"strategy={self.strategy} examined={self.examined} "
                 f"space={self.candidate_space} found={len(self.found)}"
                 + (" (search space exhausted)" if self.exhausted else "")]
        for i, fnd in enumerate(self.found):
            dist = " ".join(f"{w}:{c}" for w, c in fnd["weight_distribution"].items())
            lines.append(f"  code {i}: [{fnd['n']},{fnd['k']},{fnd['d']}] {dist} "
                         f"conj1={fnd['conj1']}" + (f" -> {fnd['path']}" if fnd.get("path") else ""))
        lines += [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def bounded_multisets(points: int, size: int, cap: int) -> int:
    """Number of multisets of ``size`` from ``points`` with multiplicity <= cap."""
    # inclusion-exclusion over points exceeding the cap
    total = 0
    for j in range(0, points + 1):
        rest = size - j * (cap + 1)
        if rest < 0:
            break
        total += (-1) ** j * comb(points, j) * comb(rest + points - 1, points - 1)
    return total


class _Recorder:
    def __init__(self, task: SearchTask, report: SearchReport, field, out_dir):
        self.task, self.report, self.field = task, report, field
        self.out_dir = Path(out_dir) if out_dir else None
        self.seen: set[tuple] = set()

    def offer(self, mult: np.ndarray) -> bool:
        """Record a Griesmer candidate; return True when the search should stop."""
        task = self.task
        pts = projective_points(self.field, task.k)
        cols = [pts[i] for i in np.nonzero(mult)[0] for _ in range(int(mult[i]))]
        gen = np.array(cols, dtype=np.int64).T
        if rank(self.field, gen) < task.k:
            return False
        code = LinearCode(self.field, gen, name=f"found{len(self.report.found)}")
        if not code.is_griesmer() or code.d != task.d:
            return False
        key = tuple(sorted(code.weight_distribution.items()))
        if key in self.seen:
            return False
        self.seen.add(key)
        verdict = verify_theorem(code, "conj1")
        entry = {"n": code.n, "k": code.k, "d": code.d,
                 "weight_distribution": code.weight_distribution,
                 "conj1": verdict.status, "gcode": dumps(code), "path": None}
        if self.out_dir is not None:
            self.out_dir.mkdir(parents=True, exist_ok=True)
            idx = len(self.report.found)
            path = self.out_dir / f"found_{idx:03d}.gcode"
            write_code(code, path)
            entry["path"] = str(path)
            if verdict.status == "fail":
                findings = self.out_dir / "findings"
                findings.mkdir(exist_ok=True)
                write_code(code, findings / f"conj1_{idx:03d}.gcode")
                (findings / f"conj1_{idx:03d}.json").write_text(
                    json.dumps(verdict.as_dict(), indent=2), encoding="utf-8")
        if verdict.status == "fail":
            log.warning("conjecture counterexample candidate found: %s", code)
        self.report.found.append(entry)
        return task.max_found is not None and len(self.report.found) >= task.max_found


def search(task: SearchTask, out_dir=None) -> SearchReport:
    field = field_of_order(task.q)
    N = len(projective_points(field, task.k))
    space = bounded_multisets(N, task.n, task.gamma)
    report = SearchReport(task=asdict(task), strategy=task.strategy, candidate_space=space)
    rec = _Recorder(task, report, field, out_dir)
    strategy = task.strategy
    if strategy == "exhaustive" and space > EXHAUSTIVE_CAP:
        report.notes.append(f"candidate space {space} exceeds {EXHAUSTIVE_CAP}; "
                            "running the random strategy instead")
        strategy = report.strategy = "random"
    if strategy == "exhaustive":
        _exhaustive(task, field, rec, report)
    else:
        _random(task, field, rec, report)
    return report


def _exhaustive(task: SearchTask, field, rec: _Recorder, report: SearchReport) -> None:
    """Depth-first over point multisets in index order, pruned on hyperplane counts."""
    inc = incidence(field, task.k).astype(np.int64)  # [hyperplane, point]
    N = inc.shape[1]
    n, limit, gam = task.n, task.n - task.d, task.gamma
    mult = np.zeros(N, dtype=np.int64)
    counts = np.zeros(inc.shape[0], dtype=np.int64)
    stop = False

    def walk(start: int, size: int) -> None:
        nonlocal stop
        if stop:
            return
        if size == n:
            report.examined += 1
            if rec.offer(mult):
                stop = True
            elif report.examined >= task.budget:
                stop = True
            return
        # remaining points must fit in indices >= start
        if (N - start) * gam < n - size:
            return
        for i in range(start, N):
            if stop:
                return
            if mult[i] == gam:
                continue
            col = inc[:, i]
            counts_new = counts + col
            if counts_new.max() > limit:
                continue
            counts[:] = counts_new
            mult[i] += 1
            walk(i, size + 1)
            mult[i] -= 1
            counts[:] = counts - col

    if task.budget > 0:
        walk(0, 0)
    report.exhausted = not stop


def _random(task: SearchTask, field, rec: _Recorder, report: SearchReport) -> None:
    """Hill-climb on the largest hyperplane count with random restarts."""
    rng = np.random.default_rng(task.seed)
    inc = incidence(field, task.k).astype(np.int64)
    N = inc.shape[1]
    n, limit, gam = task.n, task.n - task.d, task.gamma
    if N * gam < n:
        report.notes.append("no multiset of the required size respects gamma")
        return

    def fresh() -> np.ndarray:
        m = np.zeros(N, dtype=np.int64)
        while m.sum() < n:
            i = rng.integers(N)
            if m[i] < gam:
                m[i] += 1
        return m

    def score(m):
        c = inc @ m
        return int(c.max()), int((c == c.max()).sum())

    mult = fresh()
    cur = score(mult)
    report.examined = 1 if task.budget else 0
    stale = 0
    while report.examined < task.budget:
        if cur[0] <= limit:
            if rec.offer(mult):
                return
            mult, stale = fresh(), 0
            cur = score(mult)
            report.examined += 1
            continue
        out = rng.choice(np.nonzero(mult)[0])
        into = rng.integers(N)
        if into == out or mult[into] >= gam:
            continue
        mult[out] -= 1
        mult[into] += 1
        new = score(mult)
        report.examined += 1
        if new <= cur:
            cur, stale = new, 0
        else:
            mult[out] += 1
            mult[into] -= 1
            stale += 1
            if stale > 50 * N:
                mult, stale = fresh(), 0
                cur = score(mult)


def reverify(report: SearchReport) -> bool:
    """Every emitted code is Griesmer when re-read from its .gcode text."""
    from .codefile import loads
    return all(loads(fnd["gcode"]).is_griesmer() for fnd in report.found)
