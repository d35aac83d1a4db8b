"""Deciding the representation type of blocks.

The classifier straightens the root into the dominant chamber, splits off
null-root multiples, and matches the reduced pair against the finite and tame
case tables; everything else is wild.  A few tame cases flip to wild in a
specific small characteristic.
"""

from klrc import DominantWeight, RootVector, classify

examples = [
    ("simple root with doubled multiplicity", (0, 0, 2, 0, 0), (0, 0, 1, 0, 0), 0),
    ("doubled pair at the affine end", (0, 2, 0, 0), (1, 2, 0, 0), 0),
    ("square pattern, characteristic zero", (2, 0, 0, 0), (2, 2, 0, 0), 0),
    ("square pattern, characteristic two", (2, 0, 0, 0), (2, 2, 0, 0), 2),
    ("null root at level two", (2, 0, 0), (1, 2, 1), 0),
    ("null root at level one, rank two", (1, 0, 0), (1, 2, 1), 0),
    ("outside the weight system", (1, 0, 0), (0, 1, 0), 0),
    ("trivial block", (1, 1, 0), (0, 0, 0), 0),
    ("beyond every pattern", (2, 2, 0, 0), (1, 1, 0, 0), 0),
]

for label, m, x, char in examples:
    verdict = classify(DominantWeight(m), RootVector(x), char)
    weight = DominantWeight(m)
    print(f"{label:42} {str(weight):12} beta={RootVector(x)!s:12} "
          f"char={char}:  {verdict}")

# the straightening pipeline in action: 2*alpha_a against growing multiplicity
print("\n2*alpha_2 at rank 3 for m_2 = 2..5:")
for mult in range(2, 6):
    weight = DominantWeight((0, 0, mult, 0))
    print(f"  m_2 = {mult}: {classify(weight, RootVector((0, 0, 2, 0)))}")
