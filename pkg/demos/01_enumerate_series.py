"""Enumerating the classification: series, keys and defining matrices.

Every full intrinsic quadric surface is named by a series tag (s11, s12,
s21, s22) and a key eta = (iota+, iota-[, c[, d]]).  This script walks the
smallest Gorenstein indices and prints the matrices the keys expand to.
"""

from fiqs import SeriesId, enumerate_all, enumerate_eta, matrix_from_eta, series_membership

print("Picard number one, Gorenstein index up to 6")
print("=" * 60)
for iota in range(1, 7):
    surfaces = enumerate_all(1, iota)
    print(f"iota = {iota}: {len(surfaces)} surface(s)")
    for key, m in surfaces:
        rows = m.expand().to_lists()
        print(f"  {key.series.tag} eta={key.eta()}  third row {rows[2]}")

print()
print("The same key space at Picard number three is much richer:")
for iota in (1, 2, 3):
    print(f"iota = {iota}: {len(enumerate_all(3, iota))} surfaces")

print()
print("One series in detail: s22(3, iota=2)")
for key in enumerate_eta(SeriesId(3, "s22"), 2):
    print(f"  eta = {key.eta()}  ->  params {matrix_from_eta(key).params()}")

print()
print("Membership is an exact predicate; nearby tuples fail it:")
from fiqs import SeriesKey

good = SeriesKey(SeriesId(3, "s11"), 3, 3, -2, -2)
even = SeriesKey(SeriesId(3, "s11"), 2, 3, -2, -2)  # s11 needs iota+ odd
deep = SeriesKey(SeriesId(3, "s11"), 3, 3, -4, -2)  # 2c+d = -10 < -6
for key in (good, even, deep):
    print(f"  {key.series.tag}{key.eta()} member: {series_membership(key)}")
