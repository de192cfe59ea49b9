"""The twelve series of defining matrices, indexed by local Gorenstein indices.

For each Picard number rho = 1, 2, 3 there are four series s11, s12, s21,
s22 of surfaces.  A member is named by a key eta = (iota+, iota-[, c[, d]])
consisting of the local Gorenstein indices of the two elliptic fixed points
and, for rho >= 2, the negated local class group orders c (and d) of the
interior ring fixed points.  The Gorenstein index of the surface is
lcm(iota+, iota-).   Each key expands to a unique slope-ordered defining
matrix

    rho=1: [[-1,-1,2,0], [-1,-1,0,2], [a,b,1,1]]
    rho=2: [[-1,-1,1,1,0], [-1,-1,0,0,2], [a,b,0,c,1]]
    rho=3: [[-1,-1,1,1,0,0], [-1,-1,0,0,1,1], [a,b,0,c,0,d]]

whose third-row parameters satisfy per-rho normal-form inequalities (see
:func:`fiqs.canon.validate`).  The two digits of a series tag record a
divisibility case at each of the two elliptic fixed points; the exact
predicates are in :func:`series_membership`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .core import IntMatrix

__all__ = [
    "SERIES_TAGS",
    "SeriesId",
    "SeriesKey",
    "DefiningMatrix",
    "FIRST_TWO_ROWS",
    "series_membership",
    "enumerate_eta",
    "matrix_from_eta",
    "enumerate_all",
]

SERIES_TAGS = ("s11", "s12", "s21", "s22")

# Fixed first two rows of the defining matrix, per Picard number.
FIRST_TWO_ROWS: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {
    1: ((-1, -1, 2, 0), (-1, -1, 0, 2)),
    2: ((-1, -1, 1, 1, 0), (-1, -1, 0, 0, 2)),
    3: ((-1, -1, 1, 1, 0, 0), (-1, -1, 0, 0, 1, 1)),
}


def _check_rho(rho: int) -> None:
    if rho not in (1, 2, 3):
        raise ValueError(f"rho must be 1, 2 or 3, got {rho}")


@dataclass(frozen=True, order=True)
class SeriesId:
    rho: int
    tag: str

    def __post_init__(self) -> None:
        _check_rho(self.rho)
        if self.tag not in SERIES_TAGS:
            raise ValueError(f"unknown series tag {self.tag!r}")


@dataclass(frozen=True, order=True)
class SeriesKey:
    """One surface: a series together with eta = (iota+, iota-[, c[, d]])."""

    series: SeriesId
    iota_plus: int
    iota_minus: int
    c: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        rho = self.series.rho
        if self.iota_plus < 1 or self.iota_minus < 1:
            raise ValueError("local Gorenstein indices must be positive")
        if (self.c is not None) != (rho >= 2):
            raise ValueError(f"c must be present exactly for rho >= 2 (rho={rho})")
        if (self.d is not None) != (rho == 3):
            raise ValueError(f"d must be present exactly for rho = 3 (rho={rho})")

    @property
    def rho(self) -> int:
        return self.series.rho

    @property
    def iota(self) -> int:
        """Gorenstein index: lcm of the two local indices."""
        return lcm(self.iota_plus, self.iota_minus)

    def eta(self) -> tuple[int, ...]:
        parts = [self.iota_plus, self.iota_minus]
        if self.c is not None:
            parts.append(self.c)
        if self.d is not None:
            parts.append(self.d)
        return tuple(parts)


@dataclass(frozen=True, order=True)
class DefiningMatrix:
    """Normal-form defining matrix, stored by its free third-row parameters."""

    rho: int
    a: int
    b: int
    c: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        _check_rho(self.rho)
        if (self.c is not None) != (self.rho >= 2):
            raise ValueError(f"c must be present exactly for rho >= 2 (rho={self.rho})")
        if (self.d is not None) != (self.rho == 3):
            raise ValueError(f"d must be present exactly for rho = 3 (rho={self.rho})")

    def params(self) -> tuple[int, ...]:
        if self.rho == 1:
            return (self.a, self.b)
        if self.rho == 2:
            return (self.a, self.b, self.c)
        return (self.a, self.b, self.c, self.d)

    def third_row(self) -> tuple[int, ...]:
        if self.rho == 1:
            return (self.a, self.b, 1, 1)
        if self.rho == 2:
            return (self.a, self.b, 0, self.c, 1)
        return (self.a, self.b, 0, self.c, 0, self.d)

    def expand(self) -> IntMatrix:
        """The full 3x(rho+3) integer matrix."""
        r1, r2 = FIRST_TWO_ROWS[self.rho]
        return IntMatrix.from_rows([r1, r2, self.third_row()])

    def column(self, j: int) -> tuple[int, int, int]:
        r1, r2 = FIRST_TWO_ROWS[self.rho]
        return (r1[j], r2[j], self.third_row()[j])


def _lcm_pairs(iota: int) -> list[tuple[int, int]]:
    """All (p, q) with p, q dividing iota and lcm(p, q) = iota, lexicographic."""
    divs = [n for n in range(1, iota + 1) if iota % n == 0]
    return [(p, q) for p in divs for q in divs if lcm(p, q) == iota]


def _pair_ok(rho: int, tag: str, ip: int, im: int) -> bool:
    """Parity/divisibility and ordering constraints on (iota+, iota-)."""
    if rho == 1:
        if tag == "s11":
            return ip % 2 == 1 and im % 2 == 1 and ip <= im
        if tag == "s12":
            return ip % 2 == 1 and im % 4 == 0 and 2 * ip <= im
        if tag == "s21":
            return ip % 4 == 0 and im % 2 == 1 and ip <= 2 * im
        return ip % 4 == 0 and im % 4 == 0 and ip <= im
    if rho == 2:
        if ip % 2 == 0 or im % 2 == 0:
            return False
        if tag == "s11":
            return ip % 3 != 0 and im % 3 != 0 and ip <= im
        if tag == "s12":
            return ip % 3 != 0 and ip <= 3 * im
        if tag == "s21":
            return im % 3 != 0 and 3 * ip <= im
        return ip <= im
    if tag == "s11":
        return ip % 2 == 1 and im % 2 == 1 and ip <= im
    if tag == "s12":
        return ip % 2 == 1 and ip <= 2 * im
    if tag == "s21":
        return im % 2 == 1 and 2 * ip <= im
    return ip <= im


# Multipliers (w+, w-): local class group order of the elliptic fixed point
# x^+/x^- equals w * iota^+ / w * iota^-.  For rho=2 they are 1 or 3, for
# rho=3 they are 1 or 2; for rho=1 the analogous role is played by the
# halving in the matrix table and is handled inline.
_WEIGHTS = {
    2: {"s11": (1, 1), "s12": (1, 3), "s21": (3, 1), "s22": (3, 3)},
    3: {"s11": (1, 1), "s12": (1, 2), "s21": (2, 1), "s22": (2, 2)},
}


def series_membership(key: SeriesKey) -> bool:
    """Whether eta satisfies the defining predicate of its series."""
    rho, tag = key.series.rho, key.series.tag
    ip, im = key.iota_plus, key.iota_minus
    if not _pair_ok(rho, tag, ip, im):
        return False
    if rho == 1:
        return True
    if rho == 2:
        wp, wm = _WEIGHTS[2][tag]
        s = wp * ip + wm * im
        c = key.c
        # 1 - s/2 <= c <= -s/4, both sides compared exactly over rationals
        return c <= -1 and 2 - s <= 2 * c and 4 * c <= -s
    wp, wm = _WEIGHTS[3][tag]
    c, d = key.c, key.d
    return c <= d <= -1 and 2 * c + d >= -(wp * ip + wm * im)


def enumerate_eta(series: SeriesId, iota: int) -> list[SeriesKey]:
    """All keys of one series with Gorenstein index exactly iota.

    Ascending lexicographic in (iota+, iota-, c, d).
    """
    if iota < 1:
        raise ValueError(f"iota must be positive, got {iota}")
    rho, tag = series.rho, series.tag
    out: list[SeriesKey] = []
    for ip, im in _lcm_pairs(iota):
        if not _pair_ok(rho, tag, ip, im):
            continue
        if rho == 1:
            out.append(SeriesKey(series, ip, im))
            continue
        if rho == 2:
            wp, wm = _WEIGHTS[2][tag]
            s = wp * ip + wm * im
            c_lo = 1 - s // 2  # s is even: both iota are odd and the weights match parity
            c_hi = (-s) // 4  # floor of -s/4
            for c in range(c_lo, c_hi + 1):
                out.append(SeriesKey(series, ip, im, c))
            continue
        wp, wm = _WEIGHTS[3][tag]
        bound = wp * ip + wm * im
        c_lo = -((bound - 1) // 2)  # smallest c admitting some d
        for c in range(c_lo, 0):
            d_lo = max(c, -bound - 2 * c)
            for d in range(d_lo, 0):
                out.append(SeriesKey(series, ip, im, c, d))
    return out


def matrix_from_eta(key: SeriesKey) -> DefiningMatrix:
    """The defining matrix P_eta of a series member."""
    if not series_membership(key):
        raise ValueError(f"key does not satisfy its series predicate: {key}")
    rho, tag = key.series.rho, key.series.tag
    ip, im = key.iota_plus, key.iota_minus
    if rho == 1:
        a = ip - 1 if tag in ("s11", "s12") else ip // 2 - 1
        b = -im - 1 if tag in ("s11", "s21") else -(im // 2) - 1
        return DefiningMatrix(1, a, b)
    if rho == 2:
        a = (ip - 1) // 2 if tag in ("s11", "s12") else (3 * ip - 1) // 2
        b = -(im + 1) // 2 - key.c if tag in ("s11", "s21") else -(3 * im + 1) // 2 - key.c
        return DefiningMatrix(2, a, b, key.c)
    a = ip if tag in ("s11", "s12") else 2 * ip
    b = -im - key.c - key.d if tag in ("s11", "s21") else -2 * im - key.c - key.d
    return DefiningMatrix(3, a, b, key.c, key.d)


def enumerate_all(rho: int, iota: int) -> list[tuple[SeriesKey, DefiningMatrix]]:
    """All surfaces of Gorenstein index exactly iota, in deterministic order.

    Series tags in the fixed order s11, s12, s21, s22, keys ascending within
    each series.
    """
    _check_rho(rho)
    if iota < 1:
        raise ValueError(f"iota must be positive, got {iota}")
    out = []
    for tag in SERIES_TAGS:
        for key in enumerate_eta(SeriesId(rho, tag), iota):
            out.append((key, matrix_from_eta(key)))
    return out
