"""Deformed Fock-space expansions of divided-power words.

A word of divided powers applied to the vacuum yields a finite combination
of multipartitions with Laurent coefficients; matching coefficients of two
such expansions computes graded Hom dimensions between the corresponding
projectives.

A single residue-i step sends a multipartition to the sum over its addable
i-nodes, each weighted by q to the node-degree of the grown shape; the
divided power applies the step repeatedly and divides by the symmetric
quantum factorial in q^(d_i).  That division is exact on every expansion
reachable from the vacuum; a remainder would mean a convention drift, so it
is asserted on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cartan import DominantWeight, RootVector, cartan
from .laurent import ZERO, LaurentPolynomial, quantum_factorial
from .tableaux import Multipartition, node_degree, residue

FWord = tuple[tuple[int, int], ...]
"""A sequence of (residue, power) operator factors; the leftmost acts last."""


@dataclass(frozen=True)
class FockVector:
    """A finite combination of multipartitions sharing one charge sequence."""

    charges: tuple[int, ...]
    ell: int
    terms: tuple[tuple[Multipartition, LaurentPolynomial], ...]

    @classmethod
    def from_dict(cls, charges: tuple[int, ...], ell: int,
                  data: Mapping[Multipartition, LaurentPolynomial]) -> "FockVector":
        terms = tuple(sorted(((mp, c) for mp, c in data.items() if not c.is_zero()),
                             key=lambda item: item[0].sort_key()))
        sizes = {mp.size for mp, _ in terms}
        if len(sizes) > 1:
            raise ValueError("terms of mixed total size")
        for mp, _ in terms:
            if mp.k != len(charges):
                raise ValueError("component count does not match the charges")
        return cls(charges, ell, terms)

    @classmethod
    def vacuum(cls, weight: DominantWeight) -> "FockVector":
        empty = Multipartition.empty(weight.level)
        return cls(weight.charges, weight.ell, ((empty, LaurentPolynomial.one()),))

    def coefficient(self, shape: Multipartition) -> LaurentPolynomial:
        for mp, c in self.terms:
            if mp == shape:
                return c
        return ZERO

    def is_zero(self) -> bool:
        return not self.terms

    def size(self) -> int:
        return self.terms[0][0].size if self.terms else 0

    def content(self) -> RootVector:
        counts = [0] * (self.ell + 1)
        if self.terms:
            for node in self.terms[0][0].nodes():
                counts[residue(self.charges, node, self.ell)] += 1
        return RootVector(tuple(counts))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mp, c in self.terms:
            parts.append(f"{_coeff_prefix(c)}{mp}")
        return " + ".join(parts)


def _coeff_prefix(c: LaurentPolynomial) -> str:
    if c == LaurentPolynomial.one():
        return ""
    items = list(c.items())
    if len(items) == 1:
        e, v = items[0]
        if v == 1 and e != 0:
            return "q" if e == 1 else f"q^{e}"
    return f"({c})"


def apply_f(vector: FockVector, i: int) -> FockVector:
    """One residue-i box-adding step."""
    if not 0 <= i <= vector.ell:
        raise ValueError(f"residue {i} out of range for rank {vector.ell}")
    acc: dict[Multipartition, LaurentPolynomial] = {}
    for shape, coeff in vector.terms:
        for node in shape.addable_nodes():
            if residue(vector.charges, node, vector.ell) != i:
                continue
            grown = shape.add_node(node)
            weight = LaurentPolynomial.q(node_degree(vector.charges, grown, node, vector.ell))
            acc[grown] = acc.get(grown, ZERO) + coeff * weight
    return FockVector.from_dict(vector.charges, vector.ell, acc)


def apply_divided_f(vector: FockVector, i: int, power: int) -> FockVector:
    """The divided power: ``power`` single steps, then exact division by [power]!."""
    if power < 1:
        raise ValueError("power must be at least 1")
    result = vector
    for _ in range(power):
        result = apply_f(result, i)
    if power == 1 or result.is_zero():
        return result
    factorial = quantum_factorial(power, cartan(vector.ell).d[i])
    divided = {mp: c.exact_div(factorial) for mp, c in result.terms}
    return FockVector.from_dict(vector.charges, vector.ell, divided)


def expand(weight: DominantWeight, word: Iterable[tuple[int, int]]) -> FockVector:
    """Apply a divided-power word to the vacuum, rightmost factor first."""
    vector = FockVector.vacuum(weight)
    for i, power in reversed(tuple(word)):
        vector = apply_divided_f(vector, i, power)
    return vector


def word_content(word: Iterable[tuple[int, int]], ell: int) -> RootVector:
    counts = [0] * (ell + 1)
    for i, power in word:
        if not 0 <= i <= ell:
            raise ValueError(f"residue {i} out of range for rank {ell}")
        if power < 1:
            raise ValueError("power must be at least 1")
        counts[i] += power
    return RootVector(tuple(counts))


def residue_word(word: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """The residue sequence obtained by expanding the divided powers, in application order."""
    out: list[int] = []
    for i, power in reversed(tuple(word)):
        out.extend([i] * power)
    return tuple(out)


def hom_dim(left: FockVector, right: FockVector) -> LaurentPolynomial:
    """Graded Hom dimension between the projectives the two expansions identify."""
    if left.charges != right.charges:
        raise ValueError("expansions carry different charge sequences")
    if not left.is_zero() and not right.is_zero() and left.content() != right.content():
        raise ValueError("expansions have different contents")
    table = dict(right.terms)
    total = ZERO
    for mp, c in left.terms:
        other = table.get(mp)
        if other is not None:
            total = total + c * other
    return total


def parse_word(text: str) -> FWord:
    """Parse ``i^r,i^r,...`` into an operator word (leftmost factor acts last)."""
    factors = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty factor in word")
        if "^" in chunk:
            base, _, exp = chunk.partition("^")
            factors.append((int(base), int(exp)))
        else:
            factors.append((int(chunk), 1))
    return tuple(factors)
