"""Points, hyperplanes and point multisets of PG(k-1, q).

A full-length code is identified with the multiset of points spanned by its
generator columns; codeword weights become hyperplane counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

import numpy as np

from .finite_field import FieldSpec, canonical, nullspace, rank, rref
from .linear_code import CodeError, LinearCode, ceil_div, griesmer_bound

Point = tuple[int, ...]


@lru_cache(maxsize=None)
def projective_points(field: FieldSpec, k: int) -> tuple[Point, ...]:
    """Canonical representatives of PG(k-1, q) in lexicographic order."""
    pts = []
    for v in product(range(field.q), repeat=k):
        for x in v:
            if x:
                if x == 1:
                    pts.append(v)
                break
    return tuple(pts)


@lru_cache(maxsize=None)
def point_index(field: FieldSpec, k: int) -> dict[Point, int]:
    return {pt: i for i, pt in enumerate(projective_points(field, k))}


@lru_cache(maxsize=None)
def incidence(field: FieldSpec, k: int) -> np.ndarray:
    """Boolean matrix ``inc[h, x]``: point x lies on the hyperplane with normal h."""
    pts = np.array(projective_points(field, k), dtype=np.int64)
    dots = field.matmul(pts, pts.T)
    inc = dots == 0
    inc.setflags(write=False)
    return inc


def hyperplanes(field: FieldSpec, k: int) -> tuple[Point, ...]:
    """Hyperplane normals; same canonical enumeration as the points."""
    return projective_points(field, k)


def point_count(q: int, k: int) -> int:
    return (q ** k - 1) // (q - 1)


@dataclass(frozen=True)
class PointMultiset:
    """Multiplicity function on PG(k-1, q); only positive entries are stored."""

    field: FieldSpec
    k: int
    mult: tuple[tuple[Point, int], ...]

    @classmethod
    def from_counts(cls, field: FieldSpec, k: int, counts: dict) -> "PointMultiset":
        idx = point_index(field, k)
        items = []
        for pt, m in counts.items():
            pt = tuple(int(x) for x in pt)
            if pt not in idx:
                raise CodeError(f"{pt} is not a canonical point of PG({k - 1},{field.q})")
            if m < 0:
                raise CodeError("negative multiplicity")
            if m:
                items.append((pt, int(m)))
        items.sort(key=lambda t: idx[t[0]])
        return cls(field, k, tuple(items))

    def as_dict(self) -> dict[Point, int]:
        return dict(self.mult)

    def __len__(self) -> int:
        return sum(m for _, m in self.mult)

    @property
    def size(self) -> int:
        return len(self)

    def __getitem__(self, pt) -> int:
        return self.as_dict().get(tuple(pt), 0)

    def vector(self) -> np.ndarray:
        """Multiplicities indexed by the global point enumeration."""
        idx = point_index(self.field, self.k)
        v = np.zeros(len(idx), dtype=np.int64)
        for pt, m in self.mult:
            v[idx[pt]] = m
        return v

    def count(self, points: Iterable[Point]) -> int:
        d = self.as_dict()
        return sum(d.get(tuple(pt), 0) for pt in points)

    def spectrum(self) -> np.ndarray:
        """M(H) for every hyperplane, by hyperplane index."""
        return incidence(self.field, self.k).astype(np.int64) @ self.vector()


def multiset_of(code: LinearCode) -> PointMultiset:
    if not code.is_full_length():
        raise CodeError("code has a zero column; multiset undefined")
    counts: dict[Point, int] = {}
    for j in range(code.n):
        pt = canonical(code.field, code.gen[:, j])
        counts[pt] = counts.get(pt, 0) + 1
    return PointMultiset.from_counts(code.field, code.k, counts)


def hyperplane_count(m: PointMultiset, normal) -> int:
    """M(H) for the hyperplane ``{x : normal . x = 0}``."""
    normal = [int(x) for x in normal]
    if len(normal) != m.k or not any(normal):
        raise CodeError(f"hyperplane normal must be a nonzero vector of length {m.k}")
    f = m.field
    return sum(mult for pt, mult in m.mult if f.dot(normal, pt) == 0)


def weight_via_geometry(code: LinearCode, message) -> int:
    """n - M(H_a) for a nonzero message a."""
    message = np.asarray(message, dtype=np.int64)
    if not message.any():
        raise CodeError("message must be nonzero")
    return code.n - hyperplane_count(multiset_of(code), message)


def divisibility_check(m: PointMultiset, n: int, delta: int) -> tuple[bool, Point | None]:
    """Whether M(H) = n (mod delta) for every hyperplane; else the first witness."""
    if delta < 1:
        raise CodeError("delta must be >= 1")
    spec = m.spectrum()
    bad = np.nonzero((spec - n) % delta)[0]
    if bad.size:
        return False, hyperplanes(m.field, m.k)[int(bad[0])]
    return True, None


def gamma(m: PointMultiset) -> int:
    if not m.mult:
        raise CodeError("gamma of an empty multiset")
    return max(c for _, c in m.mult)


def endpoints(m: PointMultiset) -> list[Point]:
    if not m.mult:
        return []
    g = gamma(m)
    return [pt for pt, c in m.mult if c == g]


def endpoint_lower_bound(q: int, k: int, d: int) -> int:
    """g_q(k, t) with t = d - (ceil(d / q^(k-1)) - 1) q^(k-1)."""
    t = d - (ceil_div(d, q ** (k - 1)) - 1) * q ** (k - 1)
    assert t >= 1, t
    return griesmer_bound(q, k, t)


def subspace_points(field: FieldSpec, k: int, normals) -> list[Point]:
    """Points of the subspace cut out by the given normal vectors."""
    normals = np.asarray(normals, dtype=np.int64).reshape(-1, k)
    pts = projective_points(field, k)
    return [pt for pt in pts
            if all(field.dot(h, pt) == 0 for h in normals)]


def _check_proper(field: FieldSpec, k: int, normals) -> np.ndarray:
    normals = np.asarray(normals, dtype=np.int64).reshape(-1, k)
    r = rank(field, normals)
    if r == 0 or r >= k:
        raise CodeError("subspace must be proper and nonzero")
    return normals


def restrict(m: PointMultiset, normals) -> PointMultiset:
    """M|_U for the subspace U given by normal vectors, in the ambient space."""
    normals = _check_proper(m.field, m.k, normals)
    f = m.field
    counts = {pt: c for pt, c in m.mult if all(f.dot(h, pt) == 0 for h in normals)}
    return PointMultiset.from_counts(f, m.k, counts)


def subspace_basis(field: FieldSpec, k: int, normals) -> np.ndarray:
    """Fixed basis (rows, reduced echelon) of U = intersection of the hyperplanes."""
    normals = _check_proper(field, k, normals)
    basis = nullspace(field, normals)
    return rref(field, basis)[0]


def recoordinatize(m: PointMultiset, normals) -> PointMultiset:
    """M|_U written in coordinates of a fixed basis of U, as a multiset of PG(dim U - 1, q)."""
    f = m.field
    basis = subspace_basis(f, m.k, normals)
    from .finite_field import solve_left

    counts: dict[Point, int] = {}
    for pt, c in restrict(m, normals).mult:
        coords = solve_left(f, basis, np.asarray(pt, dtype=np.int64))
        key = canonical(f, coords)
        counts[key] = counts.get(key, 0) + c
    return PointMultiset.from_counts(f, basis.shape[0], counts)


def is_projective(code: LinearCode) -> bool:
    return gamma(multiset_of(code)) == 1


def spectrum_profile(m: PointMultiset) -> dict[int, int]:
    """How many hyperplanes meet M in each possible count (a projective invariant)."""
    vals, cnts = np.unique(m.spectrum(), return_counts=True)
    return dict(zip(vals.tolist(), cnts.tolist()))


def code_from_multiset(m: PointMultiset, name: str | None = None) -> LinearCode:
    """Generator matrix whose columns list the points with multiplicity."""
    cols = [pt for pt, c in m.mult for _ in range(c)]
    if not cols:
        raise CodeError("empty multiset")
    return LinearCode(m.field, np.array(cols, dtype=np.int64).T, name=name)


def format_spectrum(m: PointMultiset) -> str:
    lines = [f"{i} {int(c)}" for i, c in enumerate(m.spectrum())]
    lines.append(f"gamma={gamma(m)} endpoints={len(endpoints(m))}")
    return "\n".join(lines)
