"""Dominant maximal weights of level-k highest weight modules in affine type C.

A weight Lambda' equivalent to Lambda determines the unique vector X with
A.X^t = hub(Lambda) - hub(Lambda') that is nonnegative and drops below the
null-root coefficients somewhere; Lambda - beta(X) is then a dominant maximal
weight, and every dominant maximal weight arises this way.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cartan import DominantWeight, RootVector, cartan, hub, pairing


class NotEquivalentError(ValueError):
    """The two weights do not lie in the same equivalence class."""


def ev(weight: DominantWeight) -> int:
    """Sum of the fundamental multiplicities at odd indices."""
    return sum(weight.m[i] for i in range(1, weight.ell + 1, 2))


def class_members(weight: DominantWeight) -> list[DominantWeight]:
    """All level-k dominant weights equivalent to ``weight``.

    Membership is the parity condition: ev agrees modulo 2.  The result is
    sorted lexicographically on the multiplicity vector.
    """
    k, ell = weight.level, weight.ell
    if k < 1:
        raise ValueError("level must be at least 1")
    parity = ev(weight) % 2
    members = []
    # weak compositions of k into ell+1 parts, by stars and bars
    for bars in combinations(range(k + ell), ell):
        m = []
        prev = -1
        for b in bars:
            m.append(b - prev - 1)
            prev = b
        m.append(k + ell - 1 - prev)
        candidate = DominantWeight(tuple(m))
        if ev(candidate) % 2 == parity:
            members.append(candidate)
    members.sort(key=lambda w: w.m)
    return members


@dataclass(frozen=True)
class MaximalWeightDatum:
    """A class member together with its minimal solution vector."""

    weight: DominantWeight
    x: RootVector

    @property
    def size(self) -> int:
        return self.x.height

    @property
    def beta(self) -> RootVector:
        return self.x


def minimal_solution(y: tuple[int, ...], ell: int) -> RootVector:
    """The unique X with A.X^t = y^t, min X >= 0 and min(X - delta) < 0.

    Requires sum(y) = 0 and sum(i*y_i) even.  The particular solution is the
    closed-form prefix-sum vector; the general solution shifts it by integer
    multiples of the null-root coefficients, and exactly one shift meets both
    minimality conditions.
    """
    datum = cartan(ell)
    if sum(y) != 0 or sum(i * y[i] for i in range(ell + 1)) % 2:
        raise NotEquivalentError(f"no equivalence-class solution for y={y}")
    xhat = [0] * (ell + 1)
    for j in range(1, ell):
        xhat[j] = -sum((j - t) * y[t] for t in range(j))
    xhat[ell] = sum(t * y[t] for t in range(ell + 1)) // 2
    delta = datum.delta_coeffs
    shift = -min(xj // dj for xj, dj in zip(xhat, delta))
    x = tuple(xj + shift * dj for xj, dj in zip(xhat, delta))
    assert datum.apply_matrix(x) == tuple(y)
    assert min(x) >= 0 and min(xi - di for xi, di in zip(x, delta)) < 0
    return RootVector(x)


def beta_of(weight: DominantWeight, other: DominantWeight) -> MaximalWeightDatum:
    """The datum of the dominant maximal weight attached to ``other`` in the class of ``weight``."""
    if weight.ell != other.ell or weight.level != other.level:
        raise NotEquivalentError("weights live in different classes")
    y = tuple(a - b for a, b in zip(hub(weight), hub(other)))
    return MaximalWeightDatum(other, minimal_solution(y, weight.ell))


def defect(weight: DominantWeight, beta: RootVector) -> int:
    """(Lambda, beta) - (beta, beta)/2."""
    bb = pairing(beta, beta)
    assert bb % 2 == 0
    return pairing(weight, beta) - bb // 2


def delta_decompose(x: RootVector) -> tuple[RootVector, int]:
    """Write x = x0 + m*delta with x0 >= 0, min(x0 - delta) < 0 and m >= 0."""
    if not x.in_positive_cone():
        raise ValueError("vector must lie in the positive cone")
    delta = cartan(x.ell).delta_coeffs
    m = min(xi // di for xi, di in zip(x.coeffs, delta))
    assert m >= 0
    x0 = RootVector(tuple(xi - m * di for xi, di in zip(x.coeffs, delta)))
    assert x0.in_positive_cone() and min(c - d for c, d in zip(x0.coeffs, delta)) < 0
    return x0, m


def _straighten(weight: DominantWeight, beta: RootVector) -> tuple[RootVector | None, list[int]]:
    if weight.ell != beta.ell:
        raise ValueError("rank mismatch")
    if weight.level < 1:
        raise ValueError("level must be at least 1")
    coeffs = list(beta.coeffs)
    datum = cartan(weight.ell)
    word: list[int] = []
    bound = 8 * (weight.level + sum(abs(c) for c in coeffs) + 2) ** 2
    for _ in range(bound):
        h = [mi - sum(row[j] * coeffs[j] for j in range(len(coeffs)))
             for mi, row in zip(weight.m, datum.matrix)]
        i = next((j for j, v in enumerate(h) if v < 0), None)
        if i is None:
            return RootVector(tuple(coeffs)), word
        word.append(i)
        coeffs[i] += h[i]
        if coeffs[i] < 0:
            return None, word
    raise AssertionError("straightening failed to terminate within bound")


def dominantify(weight: DominantWeight, beta: RootVector) -> RootVector | None:
    """Straighten Lambda - beta into the dominant chamber by simple reflections.

    Repeatedly reflects at the smallest index whose coroot pairing is
    negative.  Returns the straightened vector when the hub becomes
    nonnegative, or None as soon as a coefficient of beta goes negative
    (the weight then lies outside the weight system and the algebra is zero).
    """
    return _straighten(weight, beta)[0]


def reflection_word(weight: DominantWeight, beta: RootVector) -> list[int] | None:
    """The sequence of reflection indices applied by ``dominantify``, or None."""
    result, word = _straighten(weight, beta)
    return word if result is not None else None


def sigma_flip(weight: DominantWeight, beta: RootVector) -> tuple[DominantWeight, RootVector]:
    """The diagram involution i -> ell - i applied to both arguments."""
    return weight.sigma(), beta.sigma()
