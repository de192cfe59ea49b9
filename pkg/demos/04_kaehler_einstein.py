"""Kaehler-Einstein existence: barycenters, polygons and the family rule.

For each special toric degeneration the moment polytope's barycenter must
sit on the vertical axis, strictly above the origin.  The closed-form
barycenters decide this instantly; the polygon path (Fano polygon -> dual
-> centroid) recomputes them from scratch.
"""

from fiqs import (
    DefiningMatrix,
    barycenter_oracle,
    barycenters,
    count,
    degeneration_polygon,
    enumerate_all,
    is_ke_family,
    is_ke_oracle,
)
from fiqs.kaehler import dual_polygon

ke = DefiningMatrix(3, 3, 1, -2, -2)
not_ke = DefiningMatrix(3, 3, 0, -2, -1)  # barycenters on the axis but at height 0

for m in (ke, not_ke):
    print(f"params {m.params()}: Kaehler-Einstein = {is_ke_oracle(m)}")
    for bc in barycenters(m):
        check = barycenter_oracle(m, bc.kappa)
        print(f"  kappa={bc.kappa}  b = ({bc.x}, {bc.y})   polygon path: {check}")
    print()

print("the kappa=0 degeneration polygon of the KE example and its dual:")
poly = degeneration_polygon(ke, 0)
print(f"  fano polygon vertices {poly}")
for u in dual_polygon(poly):
    print(f"  dual vertex ({u[0]}, {u[1]})")

print()
print("Picard number two never admits a KE metric (barycenter rides the line y = x/2):")
for key, m in enumerate_all(2, 3):
    (bc,) = barycenters(m)
    print(f"  {key.series.tag} eta={key.eta()}  b = ({bc.x}, {bc.y})")

print()
print("KE surfaces per Gorenstein index (cumulative):")
for rho in (1, 2, 3):
    table = count(rho, 12)
    ke_per_iota = [r.ke_cumulative for r in table.rows]
    print(f"  rho={rho}: {ke_per_iota}")

print()
print("family rule vs barycenter test on everything up to iota = 10:")
agree = total = 0
for rho in (1, 2, 3):
    for iota in range(1, 11):
        for key, m in enumerate_all(rho, iota):
            total += 1
            agree += is_ke_family(key) == is_ke_oracle(m)
print(f"  {agree}/{total} agree")
