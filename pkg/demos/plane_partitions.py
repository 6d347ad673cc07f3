"""Plane partitions, lozenges and the middle up-map.

For a box a x b x c the middle up-map of k[x,y,z]/(x^(a+b), y^(a+c),
z^(b+c)) is the biadjacency matrix of the hexagon graph.  Its determinant,
its permanent, MacMahon's product and a direct enumeration all agree.
Then the symmetry classes: restricted determinants against brute-force
counts, including the transpose-complement boxes with c odd where the
two disagree.
"""

from __future__ import annotations

from lefschetz import plane_partitions as pp
from lefschetz import rings
from lefschetz.linalg import determinant, permanent

for box in [(1, 1, 1), (2, 2, 1), (2, 2, 2), (1, 2, 3), (3, 3, 3)]:
    b = pp.BoxSpec(*box)
    u = rings.up_map_matrix(b.ring, b.middle)
    print(f"box {box}: det {determinant(u)}, perm {permanent(u)}, MacMahon {pp.macmahon_count(b)}, "
          f"enumerated {sum(1 for _ in pp.iter_box_pp(b))}")

box = pp.BoxSpec(2, 2, 1)
g = pp.build_hex_graph(box)
print(f"\nmatchings of the {box.a}x{box.b}x{box.c} hexagon and their plane partitions:")
for m in pp.enumerate_matchings(g):
    p = pp.matching_to_pp(box, m)
    edges = ", ".join(f"{rings.monomial_str(l)}-{rings.monomial_str(r)}" for l, r in m.pairs)
    print(f"  {p.to_json()}  sign {pp.matching_sign(g, m):+d}  {edges}")

print("\nsymmetry classes in the 2x2x2 box:")
for sc in pp.SYMMETRY_CLASSES.values():
    print(f"  {sc.id:2d} {sc.name:7s} {pp.symmetry_count((2, 2, 2), sc)}")

print("\nrestricted determinants against brute force:")
for box, cls in [((1, 1, 1), 3), ((2, 2, 2), 3), ((3, 3, 3), 3), ((2, 2, 2), 8),
                 ((1, 1, 2), 6), ((2, 2, 2), 6), ((3, 3, 2), 6), ((2, 2, 1), 6), ((2, 2, 3), 6)]:
    sc = pp.symmetry_class(cls)
    print(f"  {sc.name:7s} {box}: |det| {abs(pp.restricted_determinant(box, cls))}, brute {pp.symmetry_count(box, cls)}")

q = pp.quotient_structures((2, 2, 2), rings.GroupAction("cycle3"))
print("\ncycle quotient for a=b=c=2:", len(q.left), "+", len(q.right), "orbits;",
      "double edges", [(q.left[i], q.right[j]) for (i, j), w in q.edges.items() if w == 2])
