"""Multipartition combinatorics and graded dimensions of idempotent truncations.

A multipartition is a bare tuple of partition shapes; the charge sequence that
pins down residues travels separately with each computation, mirroring how the
weight realizes itself as an ordered sum of fundamental weights.

The one convention everything hinges on: a node q counts as *below* a node p
when q sits in a strictly lower row of the same component or in any later
component.  The degree statistic of a standard filling peels boxes from the
largest entry down, adding d_res(p) * (#addable - #removable) below-p nodes of
matching residue at each step.  This convention is pinned by regression tests
against exact reference values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .cartan import DominantWeight, GuardError, RootVector, cartan, fold_residue
from .laurent import ZERO, LaurentPolynomial

DEFAULT_MAX_BOXES = 12
DEFAULT_MAX_COMPONENTS = 5

Shape = tuple[tuple[int, ...], ...]
Node = tuple[int, int, int]  # (component, row, column), all 1-based


@dataclass(frozen=True)
class Multipartition:
    """An ordered tuple of partitions."""

    components: Shape

    def __post_init__(self) -> None:
        comps = []
        for part in self.components:
            part = tuple(int(r) for r in part if r)
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise ValueError(f"rows of {part} are not weakly decreasing")
            comps.append(part)
        object.__setattr__(self, "components", tuple(comps))

    @classmethod
    def empty(cls, k: int) -> "Multipartition":
        return cls(((),) * k)

    @property
    def size(self) -> int:
        return sum(sum(part) for part in self.components)

    @property
    def k(self) -> int:
        return len(self.components)

    def nodes(self) -> Iterator[Node]:
        for s, part in enumerate(self.components, start=1):
            for a, row in enumerate(part, start=1):
                for b in range(1, row + 1):
                    yield (s, a, b)

    def addable_nodes(self) -> list[Node]:
        out = []
        for s, part in enumerate(self.components, start=1):
            for a in range(1, len(part) + 2):
                row = part[a - 1] if a <= len(part) else 0
                above = part[a - 2] if a >= 2 else None
                if above is None or row < above:
                    out.append((s, a, row + 1))
        return out

    def removable_nodes(self) -> list[Node]:
        out = []
        for s, part in enumerate(self.components, start=1):
            for a, row in enumerate(part, start=1):
                below = part[a] if a < len(part) else 0
                if row > below:
                    out.append((s, a, row))
        return out

    def add_node(self, node: Node) -> "Multipartition":
        s, a, b = node
        part = list(self.components[s - 1])
        if a == len(part) + 1:
            part.append(1)
        else:
            part[a - 1] += 1
        assert part[a - 1] == b
        comps = list(self.components)
        comps[s - 1] = tuple(part)
        return Multipartition(tuple(comps))

    def remove_node(self, node: Node) -> "Multipartition":
        s, a, b = node
        part = list(self.components[s - 1])
        assert part[a - 1] == b
        part[a - 1] -= 1
        comps = list(self.components)
        comps[s - 1] = tuple(part)
        return Multipartition(tuple(comps))

    def sort_key(self) -> tuple:
        return (tuple(sum(p) for p in self.components), self.components)

    def __str__(self) -> str:
        return "(" + ",".join(_render_partition(p) for p in self.components) + ")"


def _render_partition(part: tuple[int, ...]) -> str:
    if not part:
        return "(0)"
    groups = []
    run_val, run_len = part[0], 0
    for r in part:
        if r == run_val:
            run_len += 1
        else:
            groups.append((run_val, run_len))
            run_val, run_len = r, 1
    groups.append((run_val, run_len))
    return "(" + ",".join(f"{v}^{n}" if n > 1 else str(v) for v, n in groups) + ")"


def residue(charges: Sequence[int], node: Node, ell: int) -> int:
    """Folded content of a node: column - row + component charge."""
    s, a, b = node
    return fold_residue(b - a + charges[s - 1], ell)


def content_vector(charges: Sequence[int], shape: Multipartition, ell: int) -> RootVector:
    counts = [0] * (ell + 1)
    for node in shape.nodes():
        counts[residue(charges, node, ell)] += 1
    return RootVector(tuple(counts))


def _is_below(node: Node, p: Node) -> bool:
    """Below = strictly lower row of the same component, or any later component."""
    s, a, _ = node
    ps, pa, _ = p
    return s > ps or (s == ps and a > pa)


def node_degree(charges: Sequence[int], shape: Multipartition, p: Node, ell: int) -> int:
    """d_p of a removable node: d_res(p) * (#addable - #removable) of the same residue below p."""
    res = residue(charges, p, ell)
    d = cartan(ell).d[res]
    add = sum(1 for n in shape.addable_nodes()
              if _is_below(n, p) and residue(charges, n, ell) == res)
    rem = sum(1 for n in shape.removable_nodes()
              if _is_below(n, p) and residue(charges, n, ell) == res)
    return d * (add - rem)


@dataclass(frozen=True)
class StdTableau:
    """A standard filling, stored as the node receiving each of 1..n in order."""

    shape: Multipartition
    order: tuple[Node, ...]

    def residue_sequence(self, charges: Sequence[int], ell: int) -> tuple[int, ...]:
        return tuple(residue(charges, node, ell) for node in self.order)


def standard_tableaux(shape: Multipartition) -> Iterator[StdTableau]:
    """All standard fillings, generated by growing from the empty shape."""
    n = shape.size

    def grow(current: Multipartition, order: tuple[Node, ...]) -> Iterator[tuple[Node, ...]]:
        if len(order) == n:
            yield order
            return
        for node in current.addable_nodes():
            s, a, b = node
            target = shape.components[s - 1]
            if a <= len(target) and target[a - 1] >= b:
                yield from grow(current.add_node(node), order + (node,))

    for order in grow(Multipartition.empty(shape.k), ()):
        yield StdTableau(shape, order)


def degree(charges: Sequence[int], tableau: StdTableau, ell: int) -> int:
    """Degree of a standard tableau, peeling n, n-1, ..., 1."""
    total = 0
    shape = tableau.shape
    for node in reversed(tableau.order):
        total += node_degree(charges, shape, node, ell)
        shape = shape.remove_node(node)
    return total


def kostka_q(charges: Sequence[int], nu: Sequence[int], shape: Multipartition,
             ell: int) -> LaurentPolynomial:
    """Sum of q^deg over standard fillings of ``shape`` with residue sequence ``nu``.

    Computed by peeling removable boxes whose residue matches the tail of nu,
    accumulating degrees without materializing fillings.  Subproblems are
    cached on (charges, residue prefix, shape), so shapes enumerated within
    one block query share their peeled tails.
    """
    if len(nu) != shape.size:
        return ZERO
    return _kostka_peel(tuple(charges), tuple(nu), shape.components, ell)


@lru_cache(maxsize=200_000)
def _kostka_peel(charges: tuple[int, ...], nu: tuple[int, ...], shape: Shape,
                 ell: int) -> LaurentPolynomial:
    current = Multipartition(shape)
    t = current.size
    if t == 0:
        return LaurentPolynomial.one()
    want = nu[t - 1]
    acc = ZERO
    for node in current.removable_nodes():
        if residue(charges, node, ell) != want:
            continue
        step = LaurentPolynomial.q(node_degree(charges, current, node, ell))
        acc = acc + step * _kostka_peel(charges, nu[:t - 1],
                                        current.remove_node(node).components, ell)
    return acc


def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    return _partitions_cached(n, n)


@lru_cache(maxsize=None)
def _partitions_cached(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_cached(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multipartitions(n: int, k: int) -> Iterator[Multipartition]:
    """All k-component multipartitions of n."""

    def split(remaining: int, comps: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if comps == 1:
            for part in _partitions(remaining):
                yield (part,)
            return
        for first in range(remaining + 1):
            for part in _partitions(first):
                for rest in split(remaining - first, comps - 1):
                    yield (part,) + rest

    for comps in split(n, k):
        yield Multipartition(comps)


def _check_guards(n: int, k: int, max_n: int, max_k: int) -> None:
    if n > max_n:
        raise GuardError(f"{n} boxes exceeds the cap of {max_n}")
    if k > max_k:
        raise GuardError(f"{k} components exceeds the cap of {max_k}")


def graded_hom_dim(weight: DominantWeight, beta: RootVector,
                   nu: Sequence[int], nu_prime: Sequence[int] | None = None, *,
                   max_n: int = DEFAULT_MAX_BOXES,
                   max_k: int = DEFAULT_MAX_COMPONENTS) -> LaurentPolynomial:
    """Graded dimension of the (nu, nu') idempotent truncation of the block at beta.

    Sums K(nu, shape) * K(nu', shape) over all multipartitions of |beta| with
    one component per charge.
    """
    if nu_prime is None:
        nu_prime = nu
    nu, nu_prime = tuple(nu), tuple(nu_prime)
    ell = weight.ell
    if not beta.in_positive_cone():
        raise ValueError("beta must lie in the positive cone")
    n, k = beta.height, weight.level
    _check_guards(n, k, max_n, max_k)
    for name, seq in (("nu", nu), ("nu'", nu_prime)):
        counts = [0] * (ell + 1)
        for r in seq:
            if not 0 <= r <= ell:
                raise ValueError(f"residue {r} out of range in {name}")
            counts[r] += 1
        if tuple(counts) != beta.coeffs:
            raise ValueError(f"{name} has content {tuple(counts)}, expected {beta.coeffs}")
    charges = weight.charges
    total = ZERO
    for shape in multipartitions(n, k):
        first = kostka_q(charges, nu, shape, ell)
        if first.is_zero():
            continue
        second = first if nu_prime == nu else kostka_q(charges, nu_prime, shape, ell)
        total = total + first * second
    return total


def graded_hom_dim_block(weight: DominantWeight, beta: RootVector,
                         nus: Sequence[Sequence[int]],
                         nus_prime: Sequence[Sequence[int]] | None = None, *,
                         max_n: int = DEFAULT_MAX_BOXES,
                         max_k: int = DEFAULT_MAX_COMPONENTS) -> LaurentPolynomial:
    """Graded dimension of a block truncation by sums of idempotents."""
    if nus_prime is None:
        nus_prime = nus
    total = ZERO
    for nu in nus:
        for nu_prime in nus_prime:
            total = total + graded_hom_dim(weight, beta, nu, nu_prime,
                                           max_n=max_n, max_k=max_k)
    return total
