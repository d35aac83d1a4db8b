"""Counting simple modules by weight multiplicities.

The number of simple modules of the block at beta equals the multiplicity of
the weight Lambda - beta in the highest weight module, computed here by the
exact Freudenthal recursion over the affine root system.
"""

from klrc import DominantWeight, RootVector, build_quiver, weight_multiplicity

print("counts along a quiver class (level two, rank 3):")
weight = DominantWeight((0, 0, 2, 0))
quiver = build_quiver(weight)
for vertex in quiver.vertices:
    count = weight_multiplicity(weight, vertex.x)
    print(f"  {str(vertex.weight):10} beta = {vertex.x.coeffs}   simples = {count}")

print("\nthe j+1 family at rank 4:")
for j in (2, 3):
    m = [0] * 5
    m[0], m[j] = 3, 1
    x = [0] * 5
    x[0] = 2
    for t in range(1, j + 1):
        x[t] = 1
    weight = DominantWeight(tuple(m))
    beta = RootVector(tuple(x))
    print(f"  {str(weight):10} beta = {beta}:  {weight_multiplicity(weight, beta)} simples")
