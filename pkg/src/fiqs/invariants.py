"""Geometric invariants of a surface given by a defining matrix.

Closed forms are authoritative and cheap (census-grade); each one is
paired with an independent oracle where the derivation allows it:

* divisor class group: gcd formula vs Smith normal form of the expanded
  matrix transpose,
* local Gorenstein indices: parity / divisibility case split vs an exact
  linear solve on the rays of the elliptic fixed point cones,
* degree and Picard index: matrix-parameter expressions vs the tabulated
  forms in the local Gorenstein indices,
* resolution graphs: tabulated chains, checked downstream by the
  determinant law (the negated intersection matrix of each chain has
  determinant equal to the local class group order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .canon import classify, validate
from .core import IntMatrix, gcd_list, smith_normal_form, solve3
from .kaehler import is_ke_family
from .series import DefiningMatrix, SeriesKey, matrix_from_eta

__all__ = [
    "POINT_LABELS",
    "SIGMA_RAY_COLUMNS",
    "ClassGroup",
    "LocalData",
    "ResolutionGraph",
    "SurfaceRecord",
    "class_group",
    "class_group_oracle",
    "local_orders",
    "local_gorenstein",
    "local_gorenstein_oracle",
    "local_data",
    "gorenstein_index",
    "degree",
    "degree_from_eta",
    "log_canonicity",
    "picard_index",
    "picard_index_from_eta",
    "resolution_graph",
    "chain_determinant",
    "surface_record",
    "record_from_matrix",
]

# Fixed-point labels per Picard number: the elliptic points x+ and x-, then
# the ring fixed points.
POINT_LABELS: dict[int, tuple[str, ...]] = {
    1: ("x+", "x-", "x0"),
    2: ("x+", "x-", "x0", "x1"),
    3: ("x+", "x-", "x0", "x1", "x2"),
}

# Columns spanning the cones sigma+ / sigma- of the elliptic fixed points.
SIGMA_RAY_COLUMNS: dict[int, dict[str, tuple[int, int, int]]] = {
    1: {"plus": (0, 2, 3), "minus": (1, 2, 3)},
    2: {"plus": (0, 2, 4), "minus": (1, 3, 4)},
    3: {"plus": (0, 2, 4), "minus": (1, 3, 5)},
}


@dataclass(frozen=True)
class ClassGroup:
    """Divisor class group Z^free_rank x Z/torsion (torsion_order 1 = free)."""

    free_rank: int
    torsion_order: int


@dataclass(frozen=True)
class LocalData:
    """Per fixed point: local class group order and local Gorenstein index."""

    orders: dict[str, int]
    gorenstein_indices: dict[str, int]


@dataclass(frozen=True)
class ResolutionGraph:
    """Per fixed point, the chain of exceptional-curve self-intersections.

    An empty chain means the point is smooth.
    """

    chains: dict[str, tuple[int, ...]]


@dataclass(frozen=True)
class SurfaceRecord:
    """Full invariant bundle of one surface."""

    key: SeriesKey
    matrix: DefiningMatrix
    class_group: ClassGroup
    local: LocalData
    gorenstein_index: int
    degree: Fraction
    log_canonicity: Fraction
    picard_index: int
    ke: bool
    resolution: ResolutionGraph


def _require_valid(m: DefiningMatrix) -> None:
    bad = validate(m)
    if bad:
        raise ValueError(f"matrix fails normal-form inequalities: {', '.join(bad)}")


def class_group(m: DefiningMatrix) -> ClassGroup:
    """Divisor class group from the per-rho gcd formula."""
    _require_valid(m)
    if m.rho == 1:
        return ClassGroup(1, 2 * gcd(2 * m.a + 2, m.a - m.b))
    if m.rho == 2:
        return ClassGroup(2, gcd_list([2 * m.a + 1, m.a - m.b, -m.c]))
    return ClassGroup(3, gcd_list([m.a, m.b, m.c, m.d]))


def class_group_oracle(m: DefiningMatrix) -> ClassGroup:
    """Divisor class group as the cokernel Z^(rho+3) / im(P^T), via Smith form."""
    _require_valid(m)
    snf = smith_normal_form(m.expand().transpose())
    n = m.rho + 3
    return ClassGroup(n - snf.rank, snf.torsion_order)


def local_orders(m: DefiningMatrix) -> dict[str, int]:
    """Local class group orders of the fixed points (determinant formulas)."""
    _require_valid(m)
    if m.rho == 1:
        return {"x+": 4 * m.a + 4, "x-": -4 * m.b - 4, "x0": m.a - m.b}
    if m.rho == 2:
        return {
            "x+": 1 + 2 * m.a,
            "x-": -1 - 2 * m.b - 2 * m.c,
            "x0": m.a - m.b,
            "x1": -m.c,
        }
    return {
        "x+": m.a,
        "x-": -m.b - m.c - m.d,
        "x0": m.a - m.b,
        "x1": -m.c,
        "x2": -m.d,
    }


def local_gorenstein(m: DefiningMatrix) -> tuple[int, int]:
    """Local Gorenstein indices (iota+, iota-) by the divisibility case split."""
    _require_valid(m)
    if m.rho == 1:
        ip = m.a + 1 if m.a % 2 == 0 else 2 * m.a + 2
        im = -m.b - 1 if m.b % 2 == 0 else -2 * m.b - 2
        return ip, im
    if m.rho == 2:
        np_, nm = 2 * m.a + 1, -(2 * m.b + 2 * m.c + 1)
        return (np_ // 3 if np_ % 3 == 0 else np_, nm // 3 if nm % 3 == 0 else nm)
    np_, nm = m.a, -(m.b + m.c + m.d)
    return (np_ // 2 if np_ % 2 == 0 else np_, nm // 2 if nm % 2 == 0 else nm)


def local_gorenstein_oracle(m: DefiningMatrix, which: str) -> int:
    """Local Gorenstein index of x+/x- via an exact linear solve.

    Solves <u, v_i> = alpha_i over the three rays of sigma+/sigma-, where
    alpha_i is the anticanonical coefficient (0 on the elliptic column, 1 on
    the others); the index is the lcm of the denominators of u.
    """
    _require_valid(m)
    if which not in ("plus", "minus"):
        raise ValueError(f"which must be 'plus' or 'minus', got {which!r}")
    cols = [m.column(j) for j in SIGMA_RAY_COLUMNS[m.rho][which]]
    u = solve3(IntMatrix.from_columns(cols), (0, 1, 1))
    return lcm(u[0].denominator, u[1].denominator, u[2].denominator)


def local_data(m: DefiningMatrix) -> LocalData:
    """Orders and local Gorenstein indices for all fixed points.

    Interior points always have local Gorenstein index one.
    """
    ip, im = local_gorenstein(m)
    gor = {label: 1 for label in POINT_LABELS[m.rho]}
    gor["x+"] = ip
    gor["x-"] = im
    return LocalData(local_orders(m), gor)


def gorenstein_index(m: DefiningMatrix) -> int:
    ip, im = local_gorenstein(m)
    return lcm(ip, im)


def degree(m: DefiningMatrix) -> Fraction:
    """Anticanonical self-intersection from the matrix parameters."""
    _require_valid(m)
    if m.rho == 1:
        return Fraction(1, m.a + 1) - Fraction(1, m.b + 1)
    if m.rho == 2:
        return Fraction(9, 4 * m.a + 2) - Fraction(9, 2 + 4 * m.b + 4 * m.c)
    return Fraction(4, m.a) - Fraction(4, m.b + m.c + m.d)


# Per-series numerators of the degree summands n+/iota+ + n-/iota- (for
# rho=2 the summands are n/(2 iota)).
_DEGREE_NUMERATORS = {
    1: {"1": 1, "2": 2},
    2: {"1": 9, "2": 3},
    3: {"1": 4, "2": 2},
}


def degree_from_eta(key: SeriesKey) -> Fraction:
    """Anticanonical degree in terms of the local Gorenstein indices."""
    rho, tag = key.series.rho, key.series.tag
    np_ = _DEGREE_NUMERATORS[rho][tag[1]]
    nm = _DEGREE_NUMERATORS[rho][tag[2]]
    den = 2 if rho == 2 else 1
    return Fraction(np_, den * key.iota_plus) + Fraction(nm, den * key.iota_minus)


def log_canonicity(m: DefiningMatrix) -> Fraction:
    """One plus the minimal discrepancy; attained on the sink side by slope ordering."""
    _require_valid(m)
    if m.rho == 1:
        return Fraction(1, -m.b - 1)
    if m.rho == 2:
        return Fraction(3, -2 * m.b - 2 * m.c - 1)
    return Fraction(2, -m.b - m.c - m.d)


def picard_index(m: DefiningMatrix) -> int:
    """Picard index by Springer's formula in the matrix parameters."""
    _require_valid(m)
    if m.rho == 1:
        num = -8 * (m.a + 1) * (m.b + 1) * (m.a - m.b)
        den = gcd(2 * m.a + 2, m.a - m.b)
    elif m.rho == 2:
        num = m.c * (1 + 2 * m.a) * (1 + 2 * m.b + 2 * m.c) * (m.a - m.b)
        den = gcd_list([1 + 2 * m.a, m.a - m.b, m.c])
    else:
        num = -m.a * m.c * m.d * (m.b + m.c + m.d) * (m.a - m.b)
        den = gcd_list([m.a, m.b, m.c, m.d])
    if num % den != 0 or num <= 0:
        raise ArithmeticError(f"Springer expression is not a positive integer for {m}")
    return num // den


def picard_index_from_eta(key: SeriesKey) -> int:
    """Picard index in terms of eta (tabulated forms, one per series)."""
    rho, tag = key.series.rho, key.series.tag
    ip, im = key.iota_plus, key.iota_minus
    c, d = key.c, key.d
    if rho == 1:
        if tag == "s11":
            num, den = 8 * ip * im * (ip + im), gcd(2 * ip, ip + im)
        elif tag == "s12":
            num, den = 4 * ip * im * (2 * ip + im), gcd(4 * ip, 2 * ip + im)
        elif tag == "s21":
            num, den = 4 * ip * im * (ip + 2 * im), gcd(2 * ip, ip + 2 * im)
        else:
            num, den = 2 * ip * im * (ip + im), gcd(2 * ip, ip + im)
    elif rho == 2:
        if tag == "s11":
            num, den = -c * ip * im * (ip + im + 2 * c), gcd_list([2 * ip, ip + im, 2 * c])
        elif tag == "s12":
            num, den = -3 * c * ip * im * (ip + 3 * im + 2 * c), gcd_list([2 * ip, ip + 3 * im, 2 * c])
        elif tag == "s21":
            num, den = -3 * c * ip * im * (3 * ip + im + 2 * c), gcd_list([6 * ip, 3 * ip + im, 2 * c])
        else:
            num, den = -9 * c * ip * im * (3 * ip + 3 * im + 2 * c), gcd_list([6 * ip, 3 * ip + 3 * im, 2 * c])
    else:
        if tag == "s11":
            num, den = c * d * ip * im * (ip + im + c + d), gcd_list([ip, im, c, d])
        elif tag == "s12":
            num, den = 2 * c * d * ip * im * (ip + 2 * im + c + d), gcd_list([ip, 2 * im, c, d])
        elif tag == "s21":
            num, den = 2 * c * d * ip * im * (2 * ip + im + c + d), gcd_list([2 * ip, im, c, d])
        else:
            num, den = 4 * c * d * ip * im * (2 * ip + 2 * im + c + d), gcd_list([2 * ip, 2 * im, c, d])
    if num % den != 0 or num <= 0:
        raise ArithmeticError(f"tabulated Picard expression is not a positive integer for {key}")
    return num // den


def resolution_graph(key: SeriesKey) -> ResolutionGraph:
    """Weighted resolution chains over the possibly singular fixed points.

    The elliptic points x+/x- get a central vertex (weight tabulated per
    series in the local Gorenstein index) with 2 / 1 / 0 flanking (-2)
    vertices for rho = 1 / 2 / 3; each interior point gets a pure (-2)
    chain of length one less than its local class group order.  Points of
    local class group order one are smooth: empty chain.
    """
    m = matrix_from_eta(key)
    rho, tag = key.series.rho, key.series.tag
    ip, im = key.iota_plus, key.iota_minus
    orders = local_orders(m)

    if rho == 1:
        wp = -1 - ip if tag in ("s11", "s12") else -1 - ip // 2
        wm = -1 - im if tag in ("s11", "s21") else -1 - im // 2
        plus = (-2, wp, -2)
        minus = (-2, wm, -2)
    elif rho == 2:
        wp = -(1 + ip) // 2 if tag in ("s11", "s12") else -(1 + 3 * ip) // 2
        wm = -(1 + im) // 2 if tag in ("s11", "s21") else -(1 + 3 * im) // 2
        plus = () if orders["x+"] == 1 else (-2, wp)
        minus = () if orders["x-"] == 1 else (-2, wm)
    else:
        wp = -ip if tag in ("s11", "s12") else -2 * ip
        wm = -im if tag in ("s11", "s21") else -2 * im
        plus = () if orders["x+"] == 1 else (wp,)
        minus = () if orders["x-"] == 1 else (wm,)

    chains = {"x+": plus, "x-": minus}
    for label in POINT_LABELS[rho][2:]:
        chains[label] = (-2,) * (orders[label] - 1)
    return ResolutionGraph(chains)


def chain_determinant(chain: tuple[int, ...]) -> int:
    """Determinant of the negated intersection matrix of a chain.

    The matrix is tridiagonal with diagonal -weights and off-diagonal -1;
    the empty chain has determinant 1 (smooth point).
    """
    prev2, prev1 = 0, 1
    for w in chain:
        prev2, prev1 = prev1, -w * prev1 - prev2
    return prev1


def surface_record(key: SeriesKey, matrix: DefiningMatrix | None = None) -> SurfaceRecord:
    """Assemble the full invariant bundle for one series member."""
    m = matrix_from_eta(key) if matrix is None else matrix
    return SurfaceRecord(
        key=key,
        matrix=m,
        class_group=class_group(m),
        local=local_data(m),
        gorenstein_index=key.iota,
        degree=degree(m),
        log_canonicity=log_canonicity(m),
        picard_index=picard_index(m),
        ke=is_ke_family(key),
        resolution=resolution_graph(key),
    )


def record_from_matrix(m: DefiningMatrix) -> SurfaceRecord:
    """Invariant bundle for a normal-form matrix (classified first)."""
    return surface_record(classify(m), m)
