"""Deterministic constructors for the classical Griesmer code families.

Every constructor re-derives its advertised parameters by full enumeration
before returning.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from .finite_field import FieldSpec, field_of_order, make_field
from .geometry import projective_points
from .linear_code import CodeError, LinearCode, griesmer_bound


def _verify(code: LinearCode, n: int, k: int, d: int, weights=None, griesmer=None) -> LinearCode:
    if (code.n, code.k, code.d) != (n, k, d):
        raise AssertionError(
            f"{code.name}: expected [{n},{k},{d}], got [{code.n},{code.k},{code.d}]")
    if weights is not None and set(code.weights) != set(weights):
        raise AssertionError(f"{code.name}: weight set {code.weights} != {sorted(weights)}")
    if griesmer is not None and code.is_griesmer() != griesmer:
        raise AssertionError(f"{code.name}: Griesmer flag is {not griesmer}")
    return code


def _from_columns(field: FieldSpec, cols, name: str) -> LinearCode:
    return LinearCode(field, np.array(cols, dtype=np.int64).T, name=name)


def simplex(q: int, k: int) -> LinearCode:
    if q > 9 or not 1 <= k <= 5:
        raise CodeError("simplex codes are limited to q <= 9, 1 <= k <= 5")
    field = field_of_order(q)
    code = _from_columns(field, projective_points(field, k), f"simplex({q},{k})")
    return _verify(code, (q ** k - 1) // (q - 1), k, q ** (k - 1),
                   weights=[q ** (k - 1)], griesmer=True)


def rm1(m: int) -> LinearCode:
    """First-order binary Reed-Muller code RM(1, m)."""
    if not 2 <= m <= 6:
        raise CodeError("rm1 is limited to 2 <= m <= 6")
    field = make_field(2)
    pts = list(product(range(2), repeat=m))
    gen = [[1] * len(pts)] + [[v[i] for v in pts] for i in range(m)]
    code = LinearCode(field, gen, name=f"rm1({m})")
    return _verify(code, 2 ** m, m + 1, 2 ** (m - 1),
                   weights=[2 ** (m - 1), 2 ** m], griesmer=True)


def hexacode() -> LinearCode:
    """[6,3,4]_4 code from the conic-plus-nucleus hyperoval of PG(2,4)."""
    field = field_of_order(4)
    cols = [(1, a, field.mul(a, a)) for a in field.elements()] + [(0, 0, 1), (0, 1, 0)]
    code = _from_columns(field, cols, "hexacode")
    if code.weight_distribution != {0: 1, 4: 45, 6: 18}:
        raise AssertionError(f"hexacode distribution {code.weight_distribution}")
    return _verify(code, 6, 3, 4, griesmer=True)


def unital(q0: int) -> LinearCode:
    """Hermitian curve x^(q0+1) + y^(q0+1) + z^(q0+1) = 0 in PG(2, q0^2)."""
    if q0 not in (2, 3):
        raise CodeError("unital is limited to q0 in {2, 3}")
    field = field_of_order(q0 * q0)
    e = q0 + 1

    def on_curve(pt):
        acc = 0
        for x in pt:
            acc = field.add(acc, field.pow(x, e))
        return acc == 0

    cols = [pt for pt in projective_points(field, 3) if on_curve(pt)]
    if len(cols) != q0 ** 3 + 1:
        raise AssertionError(f"Hermitian curve has {len(cols)} points, expected {q0 ** 3 + 1}")
    code = _from_columns(field, cols, f"unital({q0})")
    return _verify(code, q0 ** 3 + 1, 3, q0 ** 3 - q0,
                   weights=[q0 ** 3 - q0, q0 ** 3], griesmer=True)


def first_irreducible_quadratic(field: FieldSpec) -> tuple[int, int]:
    """(b, c) for the first irreducible X^2 + bX + c, ordered by c + b*q."""
    for v in range(field.q ** 2):
        c, b = v % field.q, v // field.q
        if all(field.add(field.add(field.mul(x, x), field.mul(b, x)), c) != 0
               for x in field.elements()):
            return b, c
    raise AssertionError("no irreducible quadratic")


def ovoid(q: int) -> LinearCode:
    """Elliptic quadric x0*x1 + phi(x2, x3) = 0 in PG(3, q)."""
    if q not in (2, 3, 4):
        raise CodeError("ovoid is limited to q in {2, 3, 4}")
    field = field_of_order(q)
    b, c = first_irreducible_quadratic(field)
    f = field

    def on_quadric(x):
        phi = f.add(f.add(f.mul(x[2], x[2]), f.mul(b, f.mul(x[2], x[3]))),
                    f.mul(c, f.mul(x[3], x[3])))
        return f.add(f.mul(x[0], x[1]), phi) == 0

    cols = [pt for pt in projective_points(field, 4) if on_quadric(pt)]
    if len(cols) != q * q + 1:
        raise AssertionError(f"quadric has {len(cols)} points, expected {q * q + 1}")
    code = _from_columns(field, cols, f"ovoid({q})")
    _verify(code, q * q + 1, 4, q * q - q, weights=[q * q - q, q * q], griesmer=True)
    # no three points collinear: every 3 columns have rank 3
    from itertools import combinations
    from .finite_field import rank
    for trio in combinations(range(code.n), 3):
        if rank(field, code.gen[:, list(trio)]) < 3:
            raise AssertionError("ovoid has three collinear points")
    return code


def repetition(q: int, n: int) -> LinearCode:
    field = field_of_order(q)
    code = LinearCode(field, [[1] * n], name=f"repetition({q},{n})")
    return _verify(code, n, 1, n, weights=[n], griesmer=True)


def reed_solomon(q: int, n: int, k: int) -> LinearCode:
    """Evaluation code of polynomials of degree < k at the first n elements."""
    if not 1 <= k <= n <= q:
        raise CodeError(f"reed_solomon needs 1 <= k <= n <= q (got q={q}, n={n}, k={k})")
    field = field_of_order(q)
    gen = [[field.pow(x, i) for x in range(n)] for i in range(k)]
    code = LinearCode(field, gen, name=f"rs({q},{n},{k})")
    d = n - k + 1
    _verify(code, n, k, d)
    if d <= q and code.is_griesmer() != (n == griesmer_bound(q, k, d)):
        raise AssertionError("Reed-Solomon Griesmer flag mismatch")
    return code


def replicate(code: LinearCode, times: int) -> LinearCode:
    """Each column repeated ``times`` times (a non-projective relative)."""
    gen = np.repeat(code.gen, times, axis=1)
    return LinearCode(code.field, gen, name=f"{times}x{code.name}")


def corpus() -> list[LinearCode]:
    """The built-in test corpus, in a fixed order."""
    codes = [simplex(q, k) for q, k in
             [(2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4),
              (4, 2), (4, 3), (5, 2), (5, 3)]]
    codes += [rm1(m) for m in (2, 3, 4, 5)]
    codes += [hexacode(), unital(2), ovoid(2), ovoid(3), ovoid(4)]
    codes += [repetition(2, 5), repetition(3, 4), repetition(4, 3)]
    codes += [reed_solomon(4, 4, 2), reed_solomon(5, 5, 3), reed_solomon(8, 8, 3)]
    codes += [replicate(simplex(2, 3), 2), replicate(simplex(3, 2), 3)]
    return codes


CONSTRUCTORS = {
    "simplex": simplex,
    "rm1": rm1,
    "hexacode": hexacode,
    "unital": unital,
    "ovoid": ovoid,
    "repetition": repetition,
    "rs": reed_solomon,
}
