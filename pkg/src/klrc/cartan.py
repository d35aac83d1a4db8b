"""Affine type C Cartan data: matrix, residue folding, bilinear form, hubs.

The index set is I = {0, 1, ..., ell} with ell >= 2.  Roots and weights are
held as exact integer coefficient vectors over I; the symmetrizing vector is
d = (2, 1, ..., 1, 2) and the null root has coefficients (1, 2, ..., 2, 1).
All values are immutable, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

DEFAULT_MAX_RANK = 16


class GuardError(Exception):
    """A configurable size guard was exceeded."""


def fold_residue(m: int, ell: int) -> int:
    """Fold an integer into I: values repeat with period 2*ell as 0,1,...,ell,ell-1,...,1."""
    if ell < 2:
        raise ValueError("rank must be at least 2")
    r = m % (2 * ell)
    return r if r <= ell else 2 * ell - r


@lru_cache(maxsize=None)
def cartan(ell: int) -> "CartanDatum":
    return CartanDatum(ell)


class CartanDatum:
    """The rank-ell affine Cartan matrix of type C together with its d-vector."""

    __slots__ = ("ell", "matrix", "d", "delta_coeffs")

    def __init__(self, ell: int):
        if ell < 2:
            raise ValueError("rank must be at least 2")
        self.ell = ell
        rows = []
        for i in range(ell + 1):
            row = [0] * (ell + 1)
            row[i] = 2
            if i > 0:
                row[i - 1] = -2 if i == 1 else -1
            if i < ell:
                row[i + 1] = -2 if i == ell - 1 else -1
            rows.append(tuple(row))
        self.matrix: tuple[tuple[int, ...], ...] = tuple(rows)
        self.d: tuple[int, ...] = (2,) + (1,) * (ell - 1) + (2,)
        self.delta_coeffs: tuple[int, ...] = (1,) + (2,) * (ell - 1) + (1,)

    @property
    def index_set(self) -> range:
        return range(self.ell + 1)

    def apply_matrix(self, x: Sequence[int]) -> tuple[int, ...]:
        """The product A . x as a coefficient vector."""
        return tuple(sum(row[j] * x[j] for j in range(self.ell + 1)) for row in self.matrix)

    def fold(self, m: int) -> int:
        return fold_residue(m, self.ell)

    def __repr__(self) -> str:
        return f"CartanDatum(ell={self.ell})"


@dataclass(frozen=True)
class RootVector:
    """An element of the root lattice, as coefficients of the simple roots."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 3:
            raise ValueError("rank must be at least 2")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, ell: int) -> "RootVector":
        return cls((0,) * (ell + 1))

    @classmethod
    def simple(cls, i: int, ell: int) -> "RootVector":
        if not 0 <= i <= ell:
            raise ValueError(f"index {i} out of range for rank {ell}")
        return cls(tuple(1 if j == i else 0 for j in range(ell + 1)))

    @classmethod
    def null_root(cls, ell: int) -> "RootVector":
        return cls(cartan(ell).delta_coeffs)

    @property
    def ell(self) -> int:
        return len(self.coeffs) - 1

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def in_positive_cone(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def sigma(self) -> "RootVector":
        """Index reversal i -> ell - i."""
        return RootVector(self.coeffs[::-1])

    def __add__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        return RootVector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __mul__(self, n: int) -> "RootVector":
        return RootVector(tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coeffs))

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(("" if c == 1 else str(c)) + f"a{i}")
        return "+".join(terms) if terms else "0"


@dataclass(frozen=True)
class DominantWeight:
    """A classical dominant integral weight, as fundamental-weight multiplicities.

    ``charges`` is an ordered realization of the weight as a sum of
    fundamental weights.  The default order is weakly increasing; a caller
    may fix another order (it only affects tableau-level bookkeeping, never
    any algebra-level quantity).
    """

    m: tuple[int, ...]
    charges: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        m = tuple(int(v) for v in self.m)
        if len(m) < 3:
            raise ValueError("rank must be at least 2")
        if any(v < 0 for v in m):
            raise ValueError("fundamental multiplicities must be nonnegative")
        object.__setattr__(self, "m", m)
        if not self.charges:
            canonical = tuple(i for i, v in enumerate(m) for _ in range(v))
            object.__setattr__(self, "charges", canonical)
        else:
            charges = tuple(int(c) for c in self.charges)
            counts = [0] * len(m)
            for c in charges:
                if not 0 <= c < len(m):
                    raise ValueError(f"charge {c} out of range")
                counts[c] += 1
            if tuple(counts) != m:
                raise ValueError("charges do not realize the weight")
            object.__setattr__(self, "charges", charges)

    @classmethod
    def fundamental(cls, i: int, ell: int) -> "DominantWeight":
        if not 0 <= i <= ell:
            raise ValueError(f"index {i} out of range for rank {ell}")
        return cls(tuple(1 if j == i else 0 for j in range(ell + 1)))

    @classmethod
    def from_charges(cls, charges: Sequence[int], ell: int) -> "DominantWeight":
        m = [0] * (ell + 1)
        for c in charges:
            if not 0 <= c <= ell:
                raise ValueError(f"charge {c} out of range for rank {ell}")
            m[c] += 1
        return cls(tuple(m), tuple(charges))

    @property
    def ell(self) -> int:
        return len(self.m) - 1

    @property
    def level(self) -> int:
        return sum(self.m)

    def with_charges(self, charges: Sequence[int]) -> "DominantWeight":
        return DominantWeight(self.m, tuple(charges))

    def sigma(self) -> "DominantWeight":
        return DominantWeight(self.m[::-1], tuple(self.ell - c for c in self.charges[::-1]))

    def __str__(self) -> str:
        terms = []
        for i, v in enumerate(self.m):
            if v == 0:
                continue
            terms.append(("" if v == 1 else str(v)) + f"Λ{i}")
        return "+".join(terms) if terms else "0"


def pairing(lhs: "DominantWeight | RootVector", rhs: RootVector) -> int:
    """The invariant symmetric form, restricted to weight-root and root-root pairs.

    (Lambda_i, alpha_j) = d_j delta_ij and (alpha_i, alpha_j) = d_i a_ij;
    a weight-weight pairing is rejected.
    """
    if not isinstance(rhs, RootVector):
        raise TypeError("right argument must be a root-lattice vector")
    if isinstance(lhs, DominantWeight):
        datum = cartan(lhs.ell)
        if lhs.ell != rhs.ell:
            raise ValueError("rank mismatch")
        return sum(mi * di * xi for mi, di, xi in zip(lhs.m, datum.d, rhs.coeffs))
    if isinstance(lhs, RootVector):
        datum = cartan(lhs.ell)
        if lhs.ell != rhs.ell:
            raise ValueError("rank mismatch")
        ax = datum.apply_matrix(rhs.coeffs)
        return sum(xi * di * v for xi, di, v in zip(lhs.coeffs, datum.d, ax))
    raise TypeError(f"unsupported left argument {type(lhs).__name__}")


def hub(weight: DominantWeight, beta: RootVector | None = None) -> tuple[int, ...]:
    """The coroot-pairing vector of Lambda - beta: m - A.x componentwise."""
    if beta is None:
        return weight.m
    if weight.ell != beta.ell:
        raise ValueError("rank mismatch")
    ax = cartan(weight.ell).apply_matrix(beta.coeffs)
    return tuple(mi - v for mi, v in zip(weight.m, ax))
