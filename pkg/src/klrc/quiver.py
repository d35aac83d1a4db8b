"""The connected directed quiver on the dominant maximal weights of a class.

Vertices are the class members with their minimal solution vectors; an arrow
raises the solution vector by one of five explicit root-lattice increments.
Arrows always point toward the larger vector, the fixed root has in-degree
zero, and every vertex is reachable from it by a directed path.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .cartan import DominantWeight, GuardError, RootVector, cartan
from .maxweights import MaximalWeightDatum, beta_of, class_members

KIND_UP = "+"              # one index raised by 2
KIND_DOWN = "-"            # one index lowered by 2
KIND_UP_UP = "++"          # two indices raised by 1
KIND_DOWN_DOWN = "--"      # two indices lowered by 1
KIND_DOWN_UP = "-+"        # one lowered, one raised by 1

DEFAULT_MAX_VERTICES = 5000


@dataclass(frozen=True)
class MoveLabel:
    """One of the five index moves, with its parameters."""

    kind: str
    i: int
    j: int | None = None

    def validate(self, ell: int) -> None:
        i, j = self.i, self.j
        if self.kind == KIND_UP:
            ok = j is None and 0 <= i <= ell - 2
        elif self.kind == KIND_DOWN:
            ok = j is None and 2 <= i <= ell
        elif self.kind == KIND_UP_UP:
            ok = j is not None and 0 <= i <= j <= ell - 1 and j != i + 1
        elif self.kind == KIND_DOWN_DOWN:
            ok = j is not None and 1 <= i <= j <= ell and j != i + 1
        elif self.kind == KIND_DOWN_UP:
            ok = j is not None and 1 <= i <= ell and 0 <= j <= ell - 1 and i - 1 != j
        else:
            raise ValueError(f"unknown move kind {self.kind!r}")
        if not ok:
            raise ValueError(f"move {self} is out of range for rank {ell}")

    def __str__(self) -> str:
        if self.kind == KIND_UP:
            return f"Δ_{{{self.i}^+}}"
        if self.kind == KIND_DOWN:
            return f"Δ_{{{self.i}^-}}"
        if self.kind == KIND_UP_UP:
            return f"Δ_{{{self.i}^+,{self.j}^+}}"
        if self.kind == KIND_DOWN_DOWN:
            return f"Δ_{{{self.i}^-,{self.j}^-}}"
        return f"Δ_{{{self.i}^-,{self.j}^+}}"


def delta_vector(label: MoveLabel, ell: int) -> RootVector:
    """The root-lattice increment attached to a move."""
    label.validate(ell)
    i, j = label.i, label.j
    if label.kind == KIND_UP:
        coeffs = (1,) + (2,) * i + (1,) + (0,) * (ell - i - 1)
    elif label.kind == KIND_DOWN:
        coeffs = (0,) * (i - 1) + (1,) + (2,) * (ell - i) + (1,)
    elif label.kind == KIND_UP_UP:
        coeffs = (1,) + (2,) * i + (1,) * (j - i) + (0,) * (ell - j)
    elif label.kind == KIND_DOWN_DOWN:
        coeffs = (0,) * i + (1,) * (j - i) + (2,) * (ell - j) + (1,)
    elif i <= j:
        coeffs = (0,) * i + (1,) * (j - i + 1) + (0,) * (ell - j)
    else:
        coeffs = (1,) + (2,) * j + (1,) * (i - j - 1) + (2,) * (ell - i) + (1,)
    return RootVector(coeffs)


def apply_move(weight: DominantWeight, label: MoveLabel) -> DominantWeight:
    """Re-index fundamental weights according to the move."""
    ell = weight.ell
    label.validate(ell)
    m = list(weight.m)
    i, j = label.i, label.j
    if label.kind == KIND_UP:
        removals, additions = [i], [i + 2]
    elif label.kind == KIND_DOWN:
        removals, additions = [i], [i - 2]
    elif label.kind == KIND_UP_UP:
        removals, additions = [i, j], [i + 1, j + 1]
    elif label.kind == KIND_DOWN_DOWN:
        removals, additions = [i, j], [i - 1, j - 1]
    else:
        removals, additions = [i, j], [i - 1, j + 1]
    for r in removals:
        m[r] -= 1
        if m[r] < 0:
            raise ValueError(f"{weight} lacks the multiplicity for move {label}")
    for a in additions:
        m[a] += 1
    return DominantWeight(tuple(m))


def candidate_moves(weight: DominantWeight) -> list[MoveLabel]:
    """All moves applicable to ``weight``, with coincident pair moves dropped.

    The pair moves at adjacent indices duplicate the single-index moves
    (the raised pair at (i, i+1) equals the single raise at i, and dually),
    so only the canonical single labels are produced.
    """
    ell, m = weight.ell, weight.m
    labels = []
    for i in range(ell - 1):
        if m[i] >= 1:
            labels.append(MoveLabel(KIND_UP, i))
    for i in range(2, ell + 1):
        if m[i] >= 1:
            labels.append(MoveLabel(KIND_DOWN, i))
    for i in range(ell):
        for j in range(i, ell):
            if j == i + 1:
                continue
            need = 2 if i == j else 1
            if m[i] >= need and m[j] >= 1:
                labels.append(MoveLabel(KIND_UP_UP, i, j))
    for i in range(1, ell + 1):
        for j in range(i, ell + 1):
            if j == i + 1:
                continue
            need = 2 if i == j else 1
            if m[i] >= need and m[j] >= 1:
                labels.append(MoveLabel(KIND_DOWN_DOWN, i, j))
    for i in range(1, ell + 1):
        for j in range(ell):
            if i - 1 == j:
                continue
            need = 2 if i == j else 1
            if m[i] >= need and (i == j or m[j] >= 1):
                labels.append(MoveLabel(KIND_DOWN_UP, i, j))
    return labels


def arrow_test(source: MaximalWeightDatum, label: MoveLabel) -> MaximalWeightDatum | None:
    """The target datum when the move yields an arrow out of ``source``.

    The move is an arrow exactly when the raised vector still drops below the
    null-root coefficients somewhere; otherwise the underlying edge points
    back toward ``source`` and None is returned.
    """
    ell = source.weight.ell
    target_weight = apply_move(source.weight, label)
    delta = delta_vector(label, ell)
    x = source.x + delta
    null = cartan(ell).delta_coeffs
    if min(c - d for c, d in zip(x.coeffs, null)) < 0:
        return MaximalWeightDatum(target_weight, x)
    return None


def witness_sequence(label: MoveLabel, ell: int) -> tuple[int, ...]:
    """A residue sequence realizing the arrow one simple root at a time.

    The sequence has length equal to the increment's height, and adding its
    simple roots in order keeps the coroot pairing at each step positive.
    """
    label.validate(ell)
    i, j = label.i, label.j
    if label.kind == KIND_UP:
        if i == 0:
            return (0, 1)
        return tuple(range(i, -1, -1)) + tuple(range(1, i)) + (i + 1, i)
    if label.kind == KIND_DOWN:
        if i == ell:
            return (ell, ell - 1)
        return tuple(range(i, ell + 1)) + tuple(range(ell - 1, i, -1)) + (i - 1, i)
    if label.kind == KIND_DOWN_UP:
        if i <= j:
            return tuple(range(i, j + 1))
        if j == 0:
            if i == ell:
                return tuple(range(ell + 1))
            return tuple(range(ell + 1)) + tuple(range(ell - 1, i - 1, -1))
        return (tuple(range(j, -1, -1)) + tuple(range(1, j)) + (j + 1, j)
                + tuple(range(j + 2, ell + 1)) + tuple(range(ell - 1, i - 1, -1)))
    if label.kind == KIND_UP_UP:
        if i == j:
            if i == 0:
                return (0,)
            return tuple(range(i, -1, -1)) + tuple(range(1, i + 1))
        # j >= i + 2: raise i by 2, then trade down at i+2 and up at j
        return witness_sequence(MoveLabel(KIND_UP, i), ell) + tuple(range(i + 2, j + 1))
    # KIND_DOWN_DOWN
    if i == j:
        if j == ell:
            return (ell,)
        return tuple(range(j, ell + 1)) + tuple(range(ell - 1, j - 1, -1))
    # i <= j - 2: lower j by 2, then trade down at i and up at j-2
    return witness_sequence(MoveLabel(KIND_DOWN, j), ell) + tuple(range(i, j - 1))


@dataclass(frozen=True)
class Arrow:
    source: DominantWeight
    target: DominantWeight
    label: MoveLabel
    delta: RootVector
    witness: tuple[int, ...]


@dataclass(frozen=True)
class MaxWeightQuiver:
    root: DominantWeight
    vertices: tuple[MaximalWeightDatum, ...]
    arrows: tuple[Arrow, ...]

    @property
    def ell(self) -> int:
        return self.root.ell

    def vertex(self, weight: DominantWeight) -> MaximalWeightDatum:
        for v in self.vertices:
            if v.weight.m == weight.m:
                return v
        raise KeyError(f"{weight} is not a vertex")

    def arrows_from(self, weight: DominantWeight) -> list[Arrow]:
        return [a for a in self.arrows if a.source.m == weight.m]


def build_quiver(weight: DominantWeight, max_vertices: int = DEFAULT_MAX_VERTICES) -> MaxWeightQuiver:
    """The full directed quiver on the equivalence class of ``weight``."""
    members = class_members(weight)
    if len(members) > max_vertices:
        raise GuardError(f"class has {len(members)} vertices, cap is {max_vertices}")
    data = {member.m: beta_of(weight, member) for member in members}
    arrows = []
    for member in members:
        source = data[member.m]
        for label in candidate_moves(member):
            target = arrow_test(source, label)
            if target is None:
                continue
            # the raised vector must agree with the target's own minimal solution
            assert target.x == data[target.weight.m].x, (member, label)
            arrows.append(Arrow(member, target.weight, label,
                                delta_vector(label, weight.ell),
                                witness_sequence(label, weight.ell)))
    arrows.sort(key=lambda a: (a.source.m, a.target.m, str(a.label)))
    return MaxWeightQuiver(weight, tuple(data[m.m] for m in members), tuple(arrows))


# -- export ------------------------------------------------------------


def export(quiver: MaxWeightQuiver, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(quiver)
    if fmt == "json":
        return to_json(quiver)
    if fmt == "tsv":
        return to_tsv(quiver)
    raise ValueError(f"unknown format {fmt!r}")


def to_dot(quiver: MaxWeightQuiver) -> str:
    names = {v.weight.m: f"v{n}" for n, v in enumerate(quiver.vertices)}
    lines = ["digraph maxweights {"]
    for v in quiver.vertices:
        lines.append(f'  {names[v.weight.m]} [label="{v.weight}"];')
    for a in quiver.arrows:
        lines.append(f'  {names[a.source.m]} -> {names[a.target.m]} [label="{a.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(quiver: MaxWeightQuiver) -> str:
    index = {v.weight.m: n for n, v in enumerate(quiver.vertices)}
    payload = {
        "ell": quiver.ell,
        "level": quiver.root.level,
        "root": list(quiver.root.m),
        "vertices": [
            {"m": list(v.weight.m), "X": list(v.x.coeffs), "beta": str(v.x)}
            for v in quiver.vertices
        ],
        "arrows": [
            {
                "src": index[a.source.m],
                "dst": index[a.target.m],
                "label": str(a.label),
                "delta": list(a.delta.coeffs),
                "witness": list(a.witness),
            }
            for a in quiver.arrows
        ],
    }
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def to_tsv(quiver: MaxWeightQuiver) -> str:
    lines = ["#source\ttarget\tlabel\tdelta"]
    for a in quiver.arrows:
        lines.append(f"{a.source}\t{a.target}\t{a.label}\t{a.delta}")
    return "\n".join(lines) + "\n"
