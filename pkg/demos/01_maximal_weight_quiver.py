"""Build the directed quiver on the dominant maximal weights of a class.

Vertices are the level-k dominant weights equivalent to the chosen one; each
carries the unique nonnegative solution X of A.X^t = hub difference that dips
below the null root somewhere.  Arrows always increase |X| and every vertex is
reachable from the chosen weight.
"""

from klrc import DominantWeight, beta_of, build_quiver, class_members, defect, export

ell = 4
weight = DominantWeight((0, 0, 2, 0, 0))  # 2*Lambda_2

print(f"class of {weight} at rank {ell}:")
for member in class_members(weight):
    datum = beta_of(weight, member)
    print(f"  {str(member):12} X = {datum.x.coeffs}   |X| = {datum.size:2}   "
          f"defect = {defect(weight, datum.x)}")

quiver = build_quiver(weight)
print(f"\n{len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows")
for arrow in quiver.arrows:
    print(f"  {arrow.source} -> {arrow.target}   {arrow.label}   "
          f"witness {arrow.witness}")

print("\nGraphviz source:")
print(export(quiver, "dot"))
